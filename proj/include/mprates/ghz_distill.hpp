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

#include <optional>
#include <string>
#include <vector>

#include "mprates/state.hpp"

// Lower bound on the rate GHZ -> sigma for N-party sigma. Alice combs the GHZ
// copies into Bell pairs with every Bob, converts the pivot's pairs into sigma
// across pivot|rest, and teleports Schumacher-compressed shares to the others:
//   R >= 1 / (E_c(pivot|rest) + sum_{j != pivot, Alice} S(sigma^{B_j})).

namespace mprates::ghz {

enum class Surrogate {
  kExactPure,      ///< sigma pure: E_c is the pivot's entropy
  kUserSupplied,   ///< override
  kFormation2x2,   ///< two-qubit entanglement of formation, >= E_c
};

std::string describe(Surrogate s);

struct Split {
  std::size_t bob;
  double ebits;  ///< Alice-Bob entanglement per GHZ copy
};

struct GhzDistillBound {
  std::size_t parties;
  std::size_t alice;
  std::size_t pivot;
  double e_c;
  Surrogate surrogate;
  /// +infinity when the denominator vanishes (sigma fully product).
  double rate_lower;
  bool unbounded;
  std::string note;
  /// Pivot first, then the other Bobs in index order. Sums to 1 when bounded.
  std::vector<Split> split;
};

/// Roles default to Alice = party 0 and pivot = the lowest other party.
/// NeedsInputError when sigma is mixed, no override is given and pivot|rest is
/// not effectively two-qubit.
GhzDistillBound ghz_rate_lower(const AnyState& sigma,
                               std::optional<std::size_t> alice = {},
                               std::optional<std::size_t> pivot = {},
                               std::optional<double> e_c_override = {});

/// Maximum over every (Alice, pivot) assignment. Assignments whose E_c cannot
/// be resolved are skipped; NeedsInputError if none resolves. An override
/// applies only when the pivot is fixed.
GhzDistillBound best_ghz_bound(const AnyState& sigma,
                               std::optional<std::size_t> alice = {},
                               std::optional<std::size_t> pivot = {},
                               std::optional<double> e_c_override = {});

/// sum_i E_i <= 1 + 1e-9. ArgumentError on a negative entry.
bool ghz_combing_feasible(const std::vector<double>& splits);

/// Wootters concurrence of a two-qubit density matrix.
double concurrence(const Matrix& rho);

/// Entanglement of formation h((1 + sqrt(1 - C^2)) / 2) of a two-qubit state.
double formation_two_qubit(const Matrix& rho);

/// Two-qubit matrix for sigma across `side | rest` when both sides have
/// support in two dimensions after truncating eigenvalues below 1e-10;
/// nullopt otherwise.
std::optional<Matrix> effective_two_qubit(const AnyState& sigma,
                                          PartySet side);

}  // namespace mprates::ghz
