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

#include <iosfwd>
#include <string>
#include <vector>

#include "mprates/state.hpp"
#include "mprates/verifier.hpp"

namespace mprates::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,  ///< infeasible target, missing input, failed battery
  kParseError = 2,   ///< bad state file or bad usage
};

/// Runs one command. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// Rates are printed with 9 decimals; infinities as "inf".
std::string fixed9(double v);

/// True for GHZ (x) GHZ -> Bell(A,B) (x) Bell(A,C) (x) Bell(B,C) on 4x4x4,
/// where the single-party upper bound is known not to be achievable.
bool is_ghz_pair_to_bell_triangle(const AnyState& source,
                                  const AnyState& target);

/// Machine-readable battery report (JSON), including the coverage matrix.
std::string report_json(const verify::BatteryReport& report);

}  // namespace mprates::cli
