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

#include <limits>
#include <optional>

#include "mprates/state.hpp"

namespace mprates {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

inline bool is_zero_entropy(double s) { return s <= tol::kZeroEntropy; }

/// Entropy ratio under the zero-denominator policy: 0/0 is excluded
/// (nullopt), x/0 with x > 0 is +infinity and never the minimum.
inline std::optional<double> entropy_ratio(double numerator,
                                           double denominator) {
  const bool zn = is_zero_entropy(numerator);
  const bool zd = is_zero_entropy(denominator);
  if (zd) {
    if (zn) return std::nullopt;
    return kInfinity;
  }
  return (zn ? 0.0 : numerator) / denominator;
}

}  // namespace mprates
