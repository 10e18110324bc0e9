// Copyright 2026 The mprates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mprates/combing.hpp"
#include "mprates/entropy.hpp"

// Rate bounds for asymptotic LOCC conversion psi -> phi of tripartite pure
// states, all computed from single-party entropies.
//
// Upper bound: min_X S(psi^X) / S(phi^X).
// Lower bound (hub X, others Y, Z):
//   min{ S(psi^X) / (S(phi^Y) + S(phi^Z)), S(psi^Y) / S(phi^Y),
//        S(psi^Z) / S(phi^Z) },
// maximized over the three choices of hub.

namespace mprates::tri {

/// Exact bipartite pure-state rate S(psi^A) / S(phi^A). DomainError when phi
/// is a product state.
double bipartite_rate(double psi_entropy, double phi_entropy);
double bipartite_rate(const EntropyProfile& psi, const EntropyProfile& phi);

struct UpperBound {
  double value;
  std::vector<std::size_t> witnesses;  ///< parties attaining the minimum
  std::array<std::optional<double>, 3> ratios;  ///< nullopt = excluded (0/0)
};

/// Which entry of the hub formula attains the minimum.
enum class Term {
  kHub,     ///< S(psi^X) / (S(phi^Y) + S(phi^Z))
  kFirst,   ///< S(psi^Y) / S(phi^Y)
  kSecond,  ///< S(psi^Z) / S(phi^Z)
};

std::string describe(Term t);

struct LowerWitness {
  std::size_t hub;
  Term term;
};

struct LowerBound {
  double value;
  std::vector<LowerWitness> witnesses;  ///< every maximizing (hub, term)
  std::array<double, 3> per_hub;        ///< bound for each hub choice
};

UpperBound upper_bound(const EntropyProfile& psi, const EntropyProfile& phi);

/// DegenerateError when every denominator vanishes (phi fully product).
LowerBound lower_bound(const EntropyProfile& psi, const EntropyProfile& phi);

struct RateBound {
  double lower = 0.0;
  double upper = 0.0;
  std::vector<LowerWitness> lower_witnesses;
  std::vector<std::size_t> upper_witnesses;
  std::array<double, 3> per_hub{};
  std::array<std::optional<double>, 3> ratios{};
  bool tight = false;
  /// Set when psi and phi are product across the same single-party cut; the
  /// bound then reduces to the exact bipartite rate on the other two parties.
  std::optional<std::size_t> common_product_party;
  /// min_X S(psi^X)/S(phi^X) when tight.
  std::optional<double> exact_rate;
};

RateBound best_bounds(const EntropyProfile& psi, const EntropyProfile& phi);
RateBound best_bounds(const PureState& psi, const PureState& phi);

/// Constructive protocol attaining the lower bound.
struct ProtocolPlan {
  double r;
  std::size_t hub;           ///< compresses and teleports
  std::size_t mu_partner;    ///< receives the teleported share
  std::size_t nu_partner;    ///< bipartite conversion partner
  combing::Target targets;   ///< E(mu) = r S(phi^mu), E(nu) = r S(phi^nu)
  combing::Plan combing;     ///< over (hub, mu_partner, nu_partner)
  double convert_rate;       ///< E(nu) / S(phi^nu), equals r
  double compress_rate;      ///< r S(phi^mu) qubits per input copy
  double teleport_budget;    ///< ebits per input copy, equals E(mu)
  bool teleport_step;        ///< false when S(phi^mu) vanishes
};

/// InternalError if the combing targets fail the combing inequalities.
ProtocolPlan plan_protocol(const EntropyProfile& psi, const EntropyProfile& phi);
ProtocolPlan plan_protocol(const PureState& psi, const PureState& phi);

enum class Reversibility {
  kIrreversible,  ///< proven: R(phi -> psi) < 1 / R(psi -> phi)
  kUndetermined,  ///< these bounds cannot decide
};

struct ReversibilityReport {
  RateBound forward;
  RateBound backward;
  Reversibility verdict;
  std::string note;
};

ReversibilityReport reversibility_gap(const EntropyProfile& psi,
                                      const EntropyProfile& phi);
ReversibilityReport reversibility_gap(const PureState& psi,
                                      const PureState& phi);

/// Per-bipartition entanglement values (regularized relative entropy of
/// entanglement) of source and target across `side | rest`.
struct BipartitionValues {
  PartySet side;
  double source;
  double target;
};

struct MixedUpperBound {
  double value;
  std::vector<PartySet> witnesses;
};

/// min over included bipartitions of source / target. Bipartitions with both
/// values zero are skipped; DegenerateError if none remain.
MixedUpperBound upper_bound_mixed(const std::vector<BipartitionValues>& values);

/// Values for pure states: reduced entropy of `side`, one entry per
/// bipartition (sides containing party 0).
std::vector<BipartitionValues> pure_bipartition_values(
    const EntropyProfile& source, const EntropyProfile& target);

/// ArgumentError unless both profiles have `n` parties with equal labels.
void require_matching(const EntropyProfile& psi, const EntropyProfile& phi,
                      std::size_t n);

}  // namespace mprates::tri
