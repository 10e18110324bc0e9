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

#include "mprates/layout.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "mprates/errors.hpp"

namespace mprates {

std::vector<std::size_t> PartySet::members() const {
  std::vector<std::size_t> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

SubsystemLayout::SubsystemLayout(std::vector<std::string> parties,
                                 std::vector<int> dims)
    : parties_(std::move(parties)), dims_(std::move(dims)) {
  if (parties_.size() < 2) {
    throw ArgumentError("layout needs at least 2 parties");
  }
  if (parties_.size() > kMaxParties) {
    throw CapacityError("layout declares more than " +
                        std::to_string(kMaxParties) + " parties");
  }
  if (parties_.size() != dims_.size()) {
    throw ArgumentError("layout has " + std::to_string(parties_.size()) +
                        " labels but " + std::to_string(dims_.size()) +
                        " dims");
  }
  std::set<std::string> seen;
  for (const auto& p : parties_) {
    if (p.empty()) throw ArgumentError("empty party label");
    if (!seen.insert(p).second) {
      throw ArgumentError("duplicate party label '" + p + "'");
    }
  }
  for (int d : dims_) {
    if (d < 2) {
      throw ArgumentError("local dimension " + std::to_string(d) +
                          " is below 2");
    }
    if (total_dim_ > std::numeric_limits<std::size_t>::max() /
                         static_cast<std::size_t>(d)) {
      throw CapacityError("total dimension overflows");
    }
    total_dim_ *= static_cast<std::size_t>(d);
  }
}

std::size_t SubsystemLayout::index_of(const std::string& label) const {
  auto it = std::find(parties_.begin(), parties_.end(), label);
  if (it == parties_.end()) {
    throw ArgumentError("unknown party label '" + label + "'");
  }
  return static_cast<std::size_t>(it - parties_.begin());
}

PartySet SubsystemLayout::subset(const std::vector<std::string>& labels) const {
  PartySet s;
  for (const auto& l : labels) s = s | PartySet::single(index_of(l));
  return s;
}

std::size_t SubsystemLayout::dim_of(PartySet set) const {
  std::size_t d = 1;
  for (auto p : set.members()) d *= static_cast<std::size_t>(dims_.at(p));
  return d;
}

std::string SubsystemLayout::name_of(PartySet set) const {
  bool multi = std::any_of(parties_.begin(), parties_.end(),
                           [](const std::string& s) { return s.size() > 1; });
  std::string out;
  for (auto p : set.members()) {
    if (multi && !out.empty()) out += ',';
    out += parties_.at(p);
  }
  return out;
}

std::vector<int> SubsystemLayout::digits(std::size_t index) const {
  std::vector<int> out(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    out[k] = static_cast<int>(index % static_cast<std::size_t>(dims_[k]));
    index /= static_cast<std::size_t>(dims_[k]);
  }
  return out;
}

std::size_t SubsystemLayout::index(const std::vector<int>& digits) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    idx = idx * static_cast<std::size_t>(dims_[k]) +
          static_cast<std::size_t>(digits.at(k));
  }
  return idx;
}

void SubsystemLayout::require_proper(PartySet set) const {
  if (set.empty()) throw ArgumentError("party subset is empty");
  if (!set.subset_of(all())) {
    throw ArgumentError("party subset refers to parties outside the layout");
  }
  if (set == all()) {
    throw ArgumentError("party subset must be a strict subset of the parties");
  }
}

}  // namespace mprates
