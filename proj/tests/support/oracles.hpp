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

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

// Reference computations for the tests. Each one takes a different route
// from the library code it checks: explicit digit loops instead of index
// grouping, SVD instead of eigendecomposition, closed forms instead of
// planners.

namespace oracle {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Reduced density matrix of a pure state on the parties in `keep` (bitmask),
/// by summing over every full basis index.
CMatrix naive_partial_trace(const CVector& psi, const std::vector<int>& dims,
                            std::uint32_t keep);
CMatrix naive_partial_trace(const CMatrix& rho, const std::vector<int>& dims,
                            std::uint32_t keep);

/// Entanglement entropy of `side` from the singular values of the
/// side x rest coefficient matrix.
double schmidt_entropy(const CVector& psi, const std::vector<int>& dims,
                       std::uint32_t side);

/// Entropy in bits of a probability vector, ignoring zeros.
double shannon_bits(const std::vector<double>& p);

/// Endpoints of the Pareto front of the combing region
/// {mu + nu <= a, mu <= b, nu <= c, mu, nu >= 0}, assuming a <= b + c.
std::array<std::array<double, 2>, 2> combing_front(double a, double b,
                                                   double c);

/// Rate triple gained by merging Bobs into Alice in `order`, from the subset
/// entropies of a pure four-party state: entropy(mask) for any mask.
template <class Entropy>
std::array<double, 3> merge_triple(const Entropy& entropy, int alice,
                                   const std::array<int, 3>& bobs,
                                   const std::array<int, 3>& order) {
  std::array<double, 3> e{};
  std::uint32_t held = 1u << alice;
  for (int k : order) {
    const std::uint32_t next = held | (1u << bobs[static_cast<std::size_t>(k)]);
    e[static_cast<std::size_t>(k)] = entropy(held) - entropy(next);
    held = next;
  }
  return e;
}

/// Best max-min value found by random convex weights over the six triples
/// (a lower estimate of the LP optimum).
double sampled_max_min(const std::array<std::array<double, 3>, 6>& triples,
                       const std::array<double, 3>& s, int samples,
                       std::uint64_t seed);

/// Concurrence of the two-qubit Werner state p|Phi+><Phi+| + (1-p) I/4.
double werner_concurrence(double p);

/// Werner state matrix in the computational basis.
CMatrix werner_state(double p);

/// Haar average of S(A) for a d_A x d_B pure state, in bits.
double page_average_bits(int da, int db);

}  // namespace oracle
