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

#include "mprates/builders.hpp"

#include <cmath>

#include "mprates/errors.hpp"

namespace mprates {

PureState ghz_state(std::vector<std::string> parties, int dim) {
  const auto n = parties.size();
  SubsystemLayout layout(std::move(parties), std::vector<int>(n, dim));
  Vector v = Vector::Zero(static_cast<Eigen::Index>(layout.total_dim()));
  const double a = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int k = 0; k < dim; ++k) {
    v(static_cast<Eigen::Index>(layout.index(std::vector<int>(n, k)))) = a;
  }
  return PureState(std::move(layout), std::move(v));
}

PureState w_state(std::vector<std::string> parties) {
  const auto n = parties.size();
  SubsystemLayout layout(std::move(parties), std::vector<int>(n, 2));
  Vector v = Vector::Zero(static_cast<Eigen::Index>(layout.total_dim()));
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<int> digits(n, 0);
    digits[k] = 1;
    v(static_cast<Eigen::Index>(layout.index(digits))) = a;
  }
  return PureState(std::move(layout), std::move(v));
}

PureState bell_pair(std::string a, std::string b) {
  return ghz_state({std::move(a), std::move(b)}, 2);
}

PureState basis_state(const SubsystemLayout& layout, std::vector<int> digits) {
  if (digits.size() != layout.num_parties()) {
    throw ArgumentError("basis_state: one digit per party required");
  }
  for (std::size_t p = 0; p < digits.size(); ++p) {
    if (digits[p] < 0 || digits[p] >= layout.dim(p)) {
      throw ArgumentError("basis_state: digit out of range");
    }
  }
  Vector v = Vector::Zero(static_cast<Eigen::Index>(layout.total_dim()));
  v(static_cast<Eigen::Index>(layout.index(digits))) = 1.0;
  return PureState(layout, std::move(v));
}

PureState distribute(const std::vector<std::string>& parties,
                     const std::vector<Share>& shares) {
  const auto n = parties.size();
  // Slot = one factor of one resource, owned by one party.
  struct Slot {
    std::size_t owner;
    int dim;
  };
  std::vector<Slot> slots;
  std::vector<std::size_t> first_slot;
  std::vector<int> local_dim(n, 1);
  {
    // Validate labels through a layout with placeholder dims.
    SubsystemLayout names(parties, std::vector<int>(n, 2));
    for (const auto& share : shares) {
      const auto& rl = share.resource.layout();
      if (share.holders.size() != rl.num_parties()) {
        throw ArgumentError("distribute: holder count does not match resource");
      }
      first_slot.push_back(slots.size());
      for (std::size_t k = 0; k < share.holders.size(); ++k) {
        const auto owner = names.index_of(share.holders[k]);
        slots.push_back({owner, rl.dim(k)});
        local_dim[owner] *= rl.dim(k);
      }
    }
  }
  std::vector<int> dims(n);
  for (std::size_t p = 0; p < n; ++p) dims[p] = std::max(2, local_dim[p]);
  SubsystemLayout layout(parties, dims);

  // Position value of each slot within its owner's local index: slots owned by
  // the same party are ordered by share order, earlier slots more significant.
  std::vector<std::size_t> weight(slots.size(), 1);
  {
    std::vector<std::size_t> running(n, 1);
    for (std::size_t s = slots.size(); s-- > 0;) {
      weight[s] = running[slots[s].owner];
      running[slots[s].owner] *= static_cast<std::size_t>(slots[s].dim);
    }
  }

  Vector v = Vector::Zero(static_cast<Eigen::Index>(layout.total_dim()));
  std::vector<std::size_t> pick(shares.size(), 0);
  std::vector<std::size_t> local(n);
  while (true) {
    Complex amp = 1.0;
    std::fill(local.begin(), local.end(), 0);
    for (std::size_t r = 0; r < shares.size(); ++r) {
      const auto& res = shares[r].resource;
      amp *= res.amplitude(pick[r]);
      const auto d = res.layout().digits(pick[r]);
      for (std::size_t k = 0; k < d.size(); ++k) {
        const auto s = first_slot[r] + k;
        local[slots[s].owner] += static_cast<std::size_t>(d[k]) * weight[s];
      }
    }
    if (amp != Complex(0.0)) {
      std::vector<int> digits(n);
      for (std::size_t p = 0; p < n; ++p) digits[p] = static_cast<int>(local[p]);
      v(static_cast<Eigen::Index>(layout.index(digits))) += amp;
    }
    std::size_t r = shares.size();
    while (r-- > 0) {
      if (++pick[r] < shares[r].resource.layout().total_dim()) break;
      pick[r] = 0;
    }
    if (r == static_cast<std::size_t>(-1)) break;
  }
  v /= v.norm();
  return PureState(std::move(layout), std::move(v));
}

}  // namespace mprates
