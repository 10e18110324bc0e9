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

#include <string>
#include <vector>

#include "mprates/state.hpp"

namespace mprates {

/// (|0...0> + ... + |d-1...d-1>)/sqrt(d) on the given parties.
PureState ghz_state(std::vector<std::string> parties, int dim = 2);

/// (|10...0> + |010...0> + ... + |0...01>)/sqrt(n).
PureState w_state(std::vector<std::string> parties);

/// (|00> + |11>)/sqrt(2).
PureState bell_pair(std::string a, std::string b);

/// Computational basis state with the given digits.
PureState basis_state(const SubsystemLayout& layout, std::vector<int> digits);

/// One resource state whose k-th factor is held by party `holders[k]`.
struct Share {
  PureState resource;
  std::vector<std::string> holders;
};

/// Tensor product of resources distributed among `parties`. A party's local
/// space is the product of the factors it holds, in share order; a party that
/// holds nothing gets a qubit in |0>.
PureState distribute(const std::vector<std::string>& parties,
                     const std::vector<Share>& shares);

}  // namespace mprates
