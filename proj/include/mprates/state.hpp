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

#include <complex>
#include <cstdint>
#include <random>
#include <variant>

#include <Eigen/Dense>

#include "mprates/layout.hpp"

namespace mprates {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Rng = std::mt19937_64;

namespace tol {
/// State validation: norm, trace, Hermiticity, negative eigenvalue floor.
inline constexpr double kValidation = 1e-10;
/// Equality assertions on entropies.
inline constexpr double kEquality = 1e-8;
/// Comparisons between rates and rate-valued bounds.
inline constexpr double kRate = 1e-9;
/// Eigenvalues below this contribute nothing to an entropy.
inline constexpr double kZeroEigenvalue = 1e-12;
/// An entropy at or below this is treated as exactly zero in rate ratios.
inline constexpr double kZeroEntropy = 1e-9;
}  // namespace tol

/// Normalized state vector over a layout.
class PureState {
 public:
  /// Throws ValidityError unless the vector has the right length and unit norm.
  PureState(SubsystemLayout layout, Vector amplitudes);

  const SubsystemLayout& layout() const { return layout_; }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex amplitude(std::size_t index) const { return amplitudes_(index); }

 private:
  SubsystemLayout layout_;
  Vector amplitudes_;
};

/// Density matrix over a layout.
class MixedState {
 public:
  /// Throws ValidityError unless Hermitian, unit trace, and PSD (all within
  /// tol::kValidation).
  MixedState(SubsystemLayout layout, Matrix matrix);
  explicit MixedState(const PureState& pure);

  const SubsystemLayout& layout() const { return layout_; }
  const Matrix& matrix() const { return matrix_; }

 private:
  SubsystemLayout layout_;
  Matrix matrix_;
};

using AnyState = std::variant<PureState, MixedState>;

const SubsystemLayout& layout_of(const AnyState& state);
bool is_pure(const AnyState& state);
MixedState to_mixed(const AnyState& state);

/// Reduced density matrix on `keep`, a nonempty strict subset of the parties.
/// Rows and columns follow the kept parties' lexicographic basis in their
/// original order. Throws ArgumentError for empty, full, or foreign subsets.
Matrix partial_trace(const PureState& state, PartySet keep);
Matrix partial_trace(const MixedState& state, PartySet keep);
Matrix partial_trace(const AnyState& state, PartySet keep);
Matrix partial_trace(const AnyState& state,
                     const std::vector<std::string>& keep);

/// Reduction to at least two parties, wrapped as a validated MixedState on the
/// sub-layout of kept parties.
MixedState reduced_state(const AnyState& state, PartySet keep);

/// Eigenvalues of a Hermitian matrix, ascending. Throws ArgumentError when the
/// matrix is not square or not Hermitian within tol::kValidation.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);

/// Half the trace norm of a - b.
double trace_distance(const MixedState& a, const MixedState& b);
double trace_distance(const AnyState& a, const AnyState& b);

/// Haar-random pure state: complex standard-normal amplitudes, normalized.
PureState random_pure_state(const SubsystemLayout& layout, Rng& rng);
PureState random_pure_state(const SubsystemLayout& layout, std::uint64_t seed);

/// Random mixed state obtained by tracing an ancilla of dimension
/// `ancilla_dim` out of a Haar-random purification.
MixedState random_mixed_state(const SubsystemLayout& layout, int ancilla_dim,
                              Rng& rng);

/// Haar-random unitary via QR of a complex Ginibre matrix with phase fix.
Matrix random_unitary(int dim, Rng& rng);

/// Applies `u` to a single party's factor.
PureState apply_local_unitary(const PureState& state, std::size_t party,
                              const Matrix& u);

/// Reorders parties; `order[k]` is the old index of the new k-th party.
PureState permute_parties(const PureState& state,
                          const std::vector<std::size_t>& order);
MixedState permute_parties(const MixedState& state,
                           const std::vector<std::size_t>& order);

}  // namespace mprates
