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

#include "mprates/entropy.hpp"

// Catalytic four-party conversion psi -> phi: Alice collects the Bobs' shares
// by state merging in one of six orders, time-shares the orders, and then
// teleports compressed shares of a locally prepared phi.

namespace mprates::quad {

/// Alice and the three Bobs, as party indices. bobs[2] is the pivot the case
/// analysis runs on.
struct Roles {
  std::size_t alice;
  std::array<std::size_t, 3> bobs;
};

/// Roles for a four-party system: Bobs in layout order, with `pivot` (if
/// given, a party index) moved to the last slot.
Roles make_roles(std::size_t alice, std::optional<std::size_t> pivot = {});

/// Entanglement gained between Alice and each Bob, ebits per input copy.
/// Entries may be negative (consumed from the catalyst).
struct RateTriple {
  std::array<double, 3> e{};
  int origin = 0;  ///< merging order 1..6, or 0 for a mixture
  double sum() const { return e[0] + e[1] + e[2]; }
};

/// Merging order of each base triple, as indices into Roles::bobs.
const std::array<std::array<int, 3>, 6>& merge_orders();

/// The six merging-order triples. Each sums to S(psi^Alice).
std::array<RateTriple, 6> base_triples(const EntropyProfile& psi,
                                       const Roles& roles);

/// E3 of orders 1,2,3 and of orders 4,5,6 are non-increasing (within 1e-9).
bool verify_triple_ordering(const std::array<RateTriple, 6>& triples);

struct GValue {
  double value;
  PartySet witness;  ///< minimizing subset of Bobs
};

/// min over nonempty subsets X of Bobs of S(psi^X) / sum_{B in X} S(phi^B).
GValue compute_g(const EntropyProfile& psi, const EntropyProfile& phi,
                 std::size_t alice);

struct Plan {
  Roles roles;
  double g;
  int case_id;                     ///< 1..5
  bool pivot_mix;                  ///< second-coordinate mix was needed
  std::array<RateTriple, 6> base;
  std::array<double, 6> weights;   ///< convex weights over `base`
  RateTriple achieved;             ///< sum_j weights[j] * base[j]
  std::array<double, 3> targets;   ///< g * S(phi^{B_i})
  std::array<double, 3> compress_rates;  ///< qubits per copy sent to each Bob
  /// Max over executed orders of the ebits that order consumes in total.
  double catalyst_budget;
  /// Max over executed orders of the ebits consumed on each Alice-Bob link.
  std::array<double, 3> catalyst_per_pair;
};

/// Constructive plan whose achieved triple dominates the g-scaled targets.
Plan plan(const EntropyProfile& psi, const EntropyProfile& phi,
          const Roles& roles);

struct UpperBound {
  double value;
  std::vector<PartySet> witnesses;
};

/// min over nonempty proper subsets T of S(psi^T) / S(phi^T).
UpperBound upper_bound(const EntropyProfile& psi, const EntropyProfile& phi);

struct Bound {
  double lower;
  std::array<double, 4> per_alice;
  std::size_t alice;
  Plan plan;
  UpperBound upper;
  bool exact;  ///< lower and upper agree within tol::kRate
};

/// Lower bound maximized over the choice of Alice, with its plan, and the
/// upper bound.
Bound best_bound(const EntropyProfile& psi, const EntropyProfile& phi);
Bound best_bound(const PureState& psi, const PureState& phi);

/// Max over convex weights w of min_i (sum_j w_j E_i^j) / s_i, restricted to
/// i with s_i > 0, by enumerating the vertices of the equivalent linear
/// program. +infinity when every s_i vanishes.
double oracle_max_min(const std::array<RateTriple, 6>& triples,
                      const std::array<double, 3>& target_entropies);

/// ArgumentError unless the profiles are four-party, pure, with equal labels.
/// NotImplementedError for five or more parties.
void require_four_party(const EntropyProfile& psi, const EntropyProfile& phi);

}  // namespace mprates::quad
