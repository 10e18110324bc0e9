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

#include "mprates/entropy.hpp"
#include "mprates/errors.hpp"

// Tripartite entanglement combing: psi^{ABC} -> mu^{A1 B} (x) nu^{A2 C}.
//
// Party 0 of the profile plays Alice, party 1 Bob, party 2 Charlie. Callers
// that want a different hub permute the profile first (see relabel()).

namespace mprates::combing {

/// Target entanglement of the two bipartite outputs, in ebits per copy.
struct Target {
  double e_mu = 0.0;  ///< Alice-Bob
  double e_nu = 0.0;  ///< Alice-Charlie
};

/// The three inequalities bounding the achievable region.
enum class Constraint {
  kTotal,       ///< e_mu + e_nu <= S(A)
  kBobCap,      ///< e_mu <= S(B)
  kCharlieCap,  ///< e_nu <= S(C)
};

std::string describe(Constraint c);

class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, Constraint violated)
      : Error(what), violated_(violated) {}
  Constraint violated() const noexcept { return violated_; }

 private:
  Constraint violated_;
};

enum class Primitive {
  kMerge,           ///< `actor` merges its share into Alice
  kAssistedDistill  ///< `actor` assists distillation between Alice and the other
};

enum class Role { kBob, kCharlie };

/// One extreme protocol of the time-sharing mix.
struct Branch {
  Primitive primitive;
  Role actor;
  double e_mu;
  double e_nu;
};

std::string describe(const Branch& b);

/// Which entropy ordering selected the branches.
struct Ordering {
  int case_id;   ///< 1: S(A) largest; 2: S(A) smallest; 3: S(A) in the middle
  bool swapped;  ///< true when the ordering holds with Bob and Charlie swapped
};

struct Plan {
  Ordering ordering;
  Branch branch_a;
  Branch branch_b;
  double p;         ///< probability of branch_a
  Target target;
  Target achieved;  ///< p * branch_a + (1 - p) * branch_b
  Target slack;     ///< achieved - target, componentwise
};

/// Checks the profile is tripartite; ArgumentError otherwise.
void require_tripartite(const EntropyProfile& profile);

/// True iff the target satisfies all three inequalities within tol::kRate.
bool feasible(const EntropyProfile& profile, const Target& target);

/// First violated inequality, if any.
std::optional<Constraint> first_violation(const EntropyProfile& profile,
                                          const Target& target);

Ordering classify(double s_a, double s_b, double s_c);

/// The two extreme protocols for the profile's entropy ordering.
std::vector<Branch> merging_branches(const EntropyProfile& profile);

/// Time-sharing plan whose achieved pair dominates `target`.
/// InfeasibleError when `target` violates any inequality.
Plan plan(const EntropyProfile& profile, const Target& target);

/// Copy of a tripartite profile with parties reordered so that `hub` is
/// party 0 and the remaining two keep their relative order unless
/// `swap_others` is set.
EntropyProfile relabel(const EntropyProfile& profile, std::size_t hub,
                       bool swap_others = false);

}  // namespace mprates::combing
