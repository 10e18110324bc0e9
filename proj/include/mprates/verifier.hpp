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

#include <cstdint>
#include <string>
#include <vector>

// Randomized property battery. Each trial draws its own generator from
// (seed, trial index), so reports do not depend on the thread count.

namespace mprates::verify {

struct Failure {
  std::size_t trial;
  std::uint64_t seed;  ///< trial seed; reproduces the failing instance
  std::string check;
  std::vector<double> observed;
  double violation;
};

struct CheckStat {
  std::string id;
  std::size_t evaluated = 0;
  std::size_t failed = 0;
  double max_violation = 0.0;
};

struct BatteryReport {
  std::string suite;
  std::size_t trials = 0;
  std::vector<int> dims;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<Failure> failures;
  /// Largest amount by which any check exceeded its bound (0 if none did).
  double max_violation = 0.0;
  std::vector<CheckStat> checks;
};

/// Maps a check id to the property it certifies.
struct CoverageEntry {
  std::string check;
  std::string suite;
  std::string module;
  std::string invariant;
};

struct Options {
  unsigned threads = 1;
  /// Negative control: perturb merging triples before they are checked.
  bool corrupt_triples = false;
  /// Overrides the suite default (1e-8 entropy identities, 1e-9 rates).
  double tolerance = 0.0;
};

const std::vector<std::string>& suites();
const std::vector<CoverageEntry>& coverage_matrix();

/// Per-trial seed derived from (seed, trial).
std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial);

/// Default layout for a suite when `dims` is empty.
std::vector<int> default_dims(const std::string& suite);

/// "2x2x3" -> {2, 2, 3}. ArgumentError on malformed input.
std::vector<int> parse_dims(const std::string& text);

/// ArgumentError for an unknown suite or a layout with the wrong party count.
BatteryReport run_battery(const std::string& suite, std::size_t trials,
                          std::vector<int> dims, std::uint64_t seed,
                          const Options& options = {});

}  // namespace mprates::verify
