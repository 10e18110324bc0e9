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

#include <stdexcept>
#include <string>

namespace mprates {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad caller input: unknown labels, malformed subsets, out-of-range values.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A state or matrix failed validation (norm, trace, Hermiticity, positivity).
class ValidityError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// Requested work exceeds a configured cap (e.g. party count for profiles).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A rate formula was asked to divide by a vanishing entropy.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Every term of a bound is excluded or undefined.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A value the library cannot compute must be supplied by the caller.
class NeedsInputError : public Error {
 public:
  NeedsInputError(const std::string& what, std::string bipartition)
      : Error(what), bipartition_(std::move(bipartition)) {}
  const std::string& bipartition() const noexcept { return bipartition_; }

 private:
  std::string bipartition_;
};

/// Functionality intentionally left out (five or more parties in the planner).
class NotImplementedError : public Error {
 public:
  using Error::Error;
};

/// A postcondition that should hold by construction did not; signals a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Malformed state file or command line. Carries the 1-based line when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace mprates
