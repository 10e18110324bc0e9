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

#include "mprates/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mprates/errors.hpp"

namespace mprates {

namespace {

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

double hermiticity_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// For every global basis index, its index within the `keep` factor and within
// the complementary factor.
struct Split {
  std::vector<std::size_t> kept;
  std::vector<std::size_t> traced;
  std::size_t dim_kept = 1;
  std::size_t dim_traced = 1;
};

Split split_indices(const SubsystemLayout& layout, PartySet keep) {
  Split s;
  s.dim_kept = layout.dim_of(keep);
  s.dim_traced = layout.dim_of(keep.complement(layout.num_parties()));
  const auto n = layout.total_dim();
  s.kept.resize(n);
  s.traced.resize(n);
  std::vector<int> digits(layout.num_parties(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = 0;
    std::size_t t = 0;
    for (std::size_t p = 0; p < digits.size(); ++p) {
      const auto d = static_cast<std::size_t>(layout.dim(p));
      if (keep.contains(p)) {
        k = k * d + static_cast<std::size_t>(digits[p]);
      } else {
        t = t * d + static_cast<std::size_t>(digits[p]);
      }
    }
    s.kept[i] = k;
    s.traced[i] = t;
    // Odometer increment, last party fastest.
    for (std::size_t p = digits.size(); p-- > 0;) {
      if (++digits[p] < layout.dim(p)) break;
      digits[p] = 0;
    }
  }
  return s;
}

SubsystemLayout sub_layout(const SubsystemLayout& layout, PartySet keep) {
  std::vector<std::string> labels;
  std::vector<int> dims;
  for (auto p : keep.members()) {
    labels.push_back(layout.parties()[p]);
    dims.push_back(layout.dim(p));
  }
  return SubsystemLayout(std::move(labels), std::move(dims));
}

// Maps each new basis index to the old one for a party reordering.
std::vector<std::size_t> permutation_map(const SubsystemLayout& old_layout,
                                         const SubsystemLayout& new_layout,
                                         const std::vector<std::size_t>& order) {
  std::vector<std::size_t> map(new_layout.total_dim());
  std::vector<int> old_digits(order.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    auto nd = new_layout.digits(i);
    for (std::size_t k = 0; k < order.size(); ++k) old_digits[order[k]] = nd[k];
    map[i] = old_layout.index(old_digits);
  }
  return map;
}

SubsystemLayout permuted_layout(const SubsystemLayout& layout,
                                const std::vector<std::size_t>& order) {
  if (order.size() != layout.num_parties()) {
    throw ArgumentError("permutation length does not match party count");
  }
  std::vector<bool> used(order.size(), false);
  std::vector<std::string> labels;
  std::vector<int> dims;
  for (auto o : order) {
    if (o >= order.size() || used[o]) {
      throw ArgumentError("party order is not a permutation");
    }
    used[o] = true;
    labels.push_back(layout.parties()[o]);
    dims.push_back(layout.dim(o));
  }
  return SubsystemLayout(std::move(labels), std::move(dims));
}

}  // namespace

PureState::PureState(SubsystemLayout layout, Vector amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != layout_.total_dim()) {
    throw ValidityError("state vector has " +
                        std::to_string(amplitudes_.size()) +
                        " amplitudes, layout needs " +
                        std::to_string(layout_.total_dim()));
  }
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > tol::kValidation) {
    throw ValidityError("state vector is not normalized: sum |a|^2 = " +
                        fmt_double(norm2));
  }
}

MixedState::MixedState(SubsystemLayout layout, Matrix matrix)
    : layout_(std::move(layout)), matrix_(std::move(matrix)) {
  const auto n = static_cast<Eigen::Index>(layout_.total_dim());
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw ValidityError("density matrix must be " + std::to_string(n) + "x" +
                        std::to_string(n));
  }
  const double herm = hermiticity_defect(matrix_);
  if (herm > tol::kValidation) {
    throw ValidityError("density matrix is not Hermitian (max defect " +
                        fmt_double(herm) + ")");
  }
  const double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) > tol::kValidation) {
    throw ValidityError("density matrix trace is " + fmt_double(tr));
  }
  const double min_eig = hermitian_eigenvalues(matrix_).minCoeff();
  if (min_eig < -tol::kValidation) {
    throw ValidityError("density matrix has negative eigenvalue " +
                        fmt_double(min_eig));
  }
}

MixedState::MixedState(const PureState& pure)
    : layout_(pure.layout()),
      matrix_(pure.amplitudes() * pure.amplitudes().adjoint()) {}

const SubsystemLayout& layout_of(const AnyState& state) {
  return std::visit(
      [](const auto& s) -> const SubsystemLayout& { return s.layout(); },
      state);
}

bool is_pure(const AnyState& state) {
  return std::holds_alternative<PureState>(state);
}

MixedState to_mixed(const AnyState& state) {
  if (const auto* p = std::get_if<PureState>(&state)) return MixedState(*p);
  return std::get<MixedState>(state);
}

Matrix partial_trace(const PureState& state, PartySet keep) {
  const auto& layout = state.layout();
  layout.require_proper(keep);
  const auto split = split_indices(layout, keep);
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(split.dim_kept),
                          static_cast<Eigen::Index>(split.dim_traced));
  for (std::size_t i = 0; i < layout.total_dim(); ++i) {
    m(static_cast<Eigen::Index>(split.kept[i]),
      static_cast<Eigen::Index>(split.traced[i])) = state.amplitude(i);
  }
  return m * m.adjoint();
}

Matrix partial_trace(const MixedState& state, PartySet keep) {
  const auto& layout = state.layout();
  layout.require_proper(keep);
  const auto split = split_indices(layout, keep);
  // Group global indices by traced index: by_traced[t][k] = global index.
  std::vector<std::vector<std::size_t>> by_traced(
      split.dim_traced, std::vector<std::size_t>(split.dim_kept));
  for (std::size_t i = 0; i < layout.total_dim(); ++i) {
    by_traced[split.traced[i]][split.kept[i]] = i;
  }
  const auto dk = static_cast<Eigen::Index>(split.dim_kept);
  Matrix out = Matrix::Zero(dk, dk);
  const auto& rho = state.matrix();
  for (const auto& group : by_traced) {
    for (Eigen::Index r = 0; r < dk; ++r) {
      for (Eigen::Index c = 0; c < dk; ++c) {
        out(r, c) += rho(static_cast<Eigen::Index>(group[r]),
                         static_cast<Eigen::Index>(group[c]));
      }
    }
  }
  return out;
}

Matrix partial_trace(const AnyState& state, PartySet keep) {
  return std::visit([&](const auto& s) { return partial_trace(s, keep); },
                    state);
}

Matrix partial_trace(const AnyState& state,
                     const std::vector<std::string>& keep) {
  return partial_trace(state, layout_of(state).subset(keep));
}

MixedState reduced_state(const AnyState& state, PartySet keep) {
  const auto& layout = layout_of(state);
  if (keep.size() < 2) {
    throw ArgumentError("reduced_state needs at least two kept parties");
  }
  return MixedState(sub_layout(layout, keep), partial_trace(state, keep));
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols()) throw ArgumentError("matrix is not square");
  const double herm = hermiticity_defect(m);
  if (herm > tol::kValidation) {
    throw ArgumentError("matrix is not Hermitian (max defect " +
                        fmt_double(herm) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw InternalError("Hermitian eigensolver did not converge");
  }
  return solver.eigenvalues();
}

double trace_distance(const MixedState& a, const MixedState& b) {
  if (!(a.layout() == b.layout())) {
    throw ArgumentError("trace_distance: layouts differ");
  }
  return 0.5 * hermitian_eigenvalues(a.matrix() - b.matrix()).cwiseAbs().sum();
}

double trace_distance(const AnyState& a, const AnyState& b) {
  return trace_distance(to_mixed(a), to_mixed(b));
}

PureState random_pure_state(const SubsystemLayout& layout, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(layout.total_dim());
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  v /= v.norm();
  return PureState(layout, std::move(v));
}

PureState random_pure_state(const SubsystemLayout& layout, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure_state(layout, rng);
}

MixedState random_mixed_state(const SubsystemLayout& layout, int ancilla_dim,
                              Rng& rng) {
  auto labels = layout.parties();
  auto dims = layout.dims();
  std::string anc = "_anc";
  while (std::find(labels.begin(), labels.end(), anc) != labels.end()) {
    anc += "_";
  }
  labels.push_back(anc);
  dims.push_back(ancilla_dim);
  const SubsystemLayout purified(std::move(labels), std::move(dims));
  const auto psi = random_pure_state(purified, rng);
  const auto keep = PartySet::all(layout.num_parties());
  return MixedState(layout, partial_trace(psi, keep));
}

Matrix random_unitary(int dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix rmat = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    const Complex d = rmat(k, k);
    const double a = std::abs(d);
    if (a > 0) q.col(k) *= d / a;
  }
  return q;
}

PureState apply_local_unitary(const PureState& state, std::size_t party,
                              const Matrix& u) {
  const auto& layout = state.layout();
  const int d = layout.dim(party);
  if (u.rows() != d || u.cols() != d) {
    throw ArgumentError("local unitary has wrong dimension");
  }
  // Stride of the party's digit in the global index.
  std::size_t stride = 1;
  for (std::size_t p = layout.num_parties(); p-- > party + 1;) {
    stride *= static_cast<std::size_t>(layout.dim(p));
  }
  Vector out = Vector::Zero(state.amplitudes().size());
  const auto& in = state.amplitudes();
  for (std::size_t i = 0; i < layout.total_dim(); ++i) {
    const auto digit = static_cast<int>((i / stride) % static_cast<std::size_t>(d));
    const std::size_t base = i - static_cast<std::size_t>(digit) * stride;
    for (int r = 0; r < d; ++r) {
      out(static_cast<Eigen::Index>(base + static_cast<std::size_t>(r) * stride)) +=
          u(r, digit) * in(static_cast<Eigen::Index>(i));
    }
  }
  // Renormalize away rounding drift from the matrix product.
  out /= out.norm();
  return PureState(layout, std::move(out));
}

PureState permute_parties(const PureState& state,
                          const std::vector<std::size_t>& order) {
  auto layout = permuted_layout(state.layout(), order);
  const auto map = permutation_map(state.layout(), layout, order);
  Vector v(static_cast<Eigen::Index>(map.size()));
  for (std::size_t i = 0; i < map.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = state.amplitude(map[i]);
  }
  return PureState(std::move(layout), std::move(v));
}

MixedState permute_parties(const MixedState& state,
                           const std::vector<std::size_t>& order) {
  auto layout = permuted_layout(state.layout(), order);
  const auto map = permutation_map(state.layout(), layout, order);
  const auto n = static_cast<Eigen::Index>(map.size());
  Matrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      m(r, c) = state.matrix()(static_cast<Eigen::Index>(map[r]),
                               static_cast<Eigen::Index>(map[c]));
    }
  }
  return MixedState(std::move(layout), std::move(m));
}

}  // namespace mprates
