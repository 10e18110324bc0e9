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

#include <map>
#include <string>
#include <vector>

#include "mprates/state.hpp"

namespace mprates {

/// Shannon entropy in bits of a spectrum. Values in [-kValidation, 0] are
/// clipped to zero and values below kZeroEigenvalue contribute nothing; more
/// negative values raise ValidityError.
double spectrum_entropy(const Eigen::VectorXd& eigenvalues);

/// S(rho) = -Tr rho log2 rho.
double von_neumann_entropy(const MixedState& rho);
/// Same for a raw matrix; ArgumentError if it is not Hermitian.
double von_neumann_entropy(const Matrix& rho);

/// h(x) = -x log2 x - (1-x) log2(1-x); ArgumentError outside [0, 1].
double binary_entropy(double x);

/// Reduced von Neumann entropies of every nonempty proper party subset, in
/// bits, plus the entropy of the whole state (zero when pure).
class EntropyProfile {
 public:
  static constexpr std::size_t kDefaultPartyCap = 8;

  /// Explicit construction. `entries` must hold every nonempty proper subset.
  /// For `pure` profiles the complement of each given subset may be omitted
  /// and is filled in; `total` is ignored and set to zero.
  EntropyProfile(SubsystemLayout layout, std::map<PartySet, double> entries,
                 bool pure, double total = 0.0);

  /// Pure tripartite profile from single-party entropies (pairs follow by
  /// complement symmetry). Local dims are chosen large enough for the values.
  static EntropyProfile pure_tripartite(double a, double b, double c,
                                        std::vector<std::string> labels = {
                                            "A", "B", "C"});

  const SubsystemLayout& layout() const { return layout_; }
  std::size_t num_parties() const { return layout_.num_parties(); }
  bool pure() const { return pure_; }

  /// S(T). T == all parties returns the global entropy.
  double at(PartySet set) const;
  double at(const std::vector<std::string>& labels) const;
  double single(std::size_t party) const { return at(PartySet::single(party)); }

  const std::map<PartySet, double>& entries() const { return entries_; }

 private:
  SubsystemLayout layout_;
  std::map<PartySet, double> entries_;
  bool pure_;
  double total_;
};

/// Profile with parties reordered; `order[k]` is the old index of the new k-th
/// party.
EntropyProfile permute_profile(const EntropyProfile& profile,
                               const std::vector<std::size_t>& order);

/// Profile of a state. CapacityError when the state has more than `party_cap`
/// parties (the subset scan is exponential).
EntropyProfile entropy_profile(const AnyState& state,
                               std::size_t party_cap =
                                   EntropyProfile::kDefaultPartyCap);

}  // namespace mprates
