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

#include "mprates/state.hpp"

// Sparse line-oriented state files:
//
//   mpstate 1
//   parties A B C
//   dims 2 2 2
//   kind pure            # or: kind mixed
//   amp 0 0.7071067811865476 0
//   amp 7 0.7071067811865476 0
//
// Mixed files use `rho <row> <col> <re> <im>`. Only the upper triangle is
// needed; a lower entry must equal the conjugate of its mirror if both are
// present. `#` starts a comment. Basis indices are lexicographic with the
// first party most significant.

namespace mprates::io {

/// ParseError (with line number) on malformed input or invalid states.
AnyState parse_state(std::istream& in);
AnyState parse_state_file(const std::string& path);

/// Exact text form; amplitudes printed with 17 significant digits.
std::string serialize_state(const AnyState& state);
void write_state_file(const std::string& path, const AnyState& state);

}  // namespace mprates::io
