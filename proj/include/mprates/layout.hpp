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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace mprates {

/// Set of parties, stored as a bitmask. Bit i is the i-th declared party.
class PartySet {
 public:
  constexpr PartySet() = default;
  constexpr explicit PartySet(std::uint32_t bits) : bits_(bits) {}

  static constexpr PartySet single(std::size_t party) {
    return PartySet(std::uint32_t{1} << party);
  }
  static PartySet of(std::initializer_list<std::size_t> parties) {
    PartySet s;
    for (auto p : parties) s = s | single(p);
    return s;
  }
  /// All parties of an n-party system.
  static constexpr PartySet all(std::size_t n) {
    return PartySet(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t party) const {
    return (bits_ >> party) & 1u;
  }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool subset_of(PartySet o) const {
    return (bits_ & ~o.bits_) == 0;
  }
  constexpr bool disjoint(PartySet o) const { return (bits_ & o.bits_) == 0; }
  /// Complement within an n-party system.
  constexpr PartySet complement(std::size_t n) const {
    return PartySet(all(n).bits_ & ~bits_);
  }
  /// Member indices in increasing order.
  std::vector<std::size_t> members() const;

  friend constexpr PartySet operator|(PartySet a, PartySet b) {
    return PartySet(a.bits_ | b.bits_);
  }
  friend constexpr PartySet operator&(PartySet a, PartySet b) {
    return PartySet(a.bits_ & b.bits_);
  }
  friend constexpr PartySet operator-(PartySet a, PartySet b) {
    return PartySet(a.bits_ & ~b.bits_);
  }
  friend constexpr auto operator<=>(PartySet, PartySet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Party labels and local dimensions of a multipartite Hilbert space.
///
/// The computational basis is lexicographic with the first declared party
/// most significant, so index = ((d0 digit) * d1 + d1 digit) * d2 + ...
class SubsystemLayout {
 public:
  /// Maximum number of parties a layout may declare (PartySet width).
  static constexpr std::size_t kMaxParties = 24;

  SubsystemLayout(std::vector<std::string> parties, std::vector<int> dims);

  const std::vector<std::string>& parties() const { return parties_; }
  const std::vector<int>& dims() const { return dims_; }
  std::size_t num_parties() const { return parties_.size(); }
  std::size_t total_dim() const { return total_dim_; }
  int dim(std::size_t party) const { return dims_.at(party); }

  /// Index of a label; throws ArgumentError for unknown labels.
  std::size_t index_of(const std::string& label) const;
  PartySet subset(const std::vector<std::string>& labels) const;
  PartySet all() const { return PartySet::all(num_parties()); }
  /// Product of local dims over the set.
  std::size_t dim_of(PartySet set) const;
  /// Labels joined without separator, e.g. "AB". Multi-character labels
  /// are joined with ','.
  std::string name_of(PartySet set) const;

  /// Digits of a basis index, one per party.
  std::vector<int> digits(std::size_t index) const;
  std::size_t index(const std::vector<int>& digits) const;

  /// Throws ArgumentError unless `set` is nonempty and a strict subset.
  void require_proper(PartySet set) const;

  friend bool operator==(const SubsystemLayout&, const SubsystemLayout&) = default;

 private:
  std::vector<std::string> parties_;
  std::vector<int> dims_;
  std::size_t total_dim_ = 1;
};

}  // namespace mprates
