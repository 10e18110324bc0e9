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

#include "mprates/ghz_distill.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "mprates/entropy.hpp"
#include "mprates/errors.hpp"
#include "mprates/ratio.hpp"

namespace mprates::ghz {

namespace {

constexpr double kSupportCut = 1e-10;

// Columns: the two dominant eigenvectors; nullopt if a third eigenvalue
// survives truncation.
std::optional<Matrix> two_dim_support(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  const auto& ev = es.eigenvalues();
  const auto n = ev.size();
  if (n >= 3 && ev(n - 3) > kSupportCut) return std::nullopt;
  return es.eigenvectors().rightCols(2);
}

double single_entropy(const AnyState& sigma, std::size_t party) {
  return von_neumann_entropy(partial_trace(sigma, PartySet::single(party)));
}

bool globally_pure(const AnyState& sigma) {
  if (is_pure(sigma)) return true;
  return is_zero_entropy(von_neumann_entropy(std::get<MixedState>(sigma)));
}

}  // namespace

std::string describe(Surrogate s) {
  switch (s) {
    case Surrogate::kExactPure:
      return "exact-pure";
    case Surrogate::kUserSupplied:
      return "user-supplied";
    case Surrogate::kFormation2x2:
      return "entanglement-of-formation-two-qubit";
  }
  return "?";
}

double concurrence(const Matrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw ArgumentError("concurrence needs a 4x4 density matrix");
  }
  Matrix yy = Matrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(3, 0) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;

  // lambda_i are the singular values of sqrt(rho) Y conj(sqrt(rho)); this
  // avoids a second square root that would amplify eigenvalue noise.
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  Eigen::VectorXd roots = es.eigenvalues();
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    roots(i) = roots(i) <= tol::kZeroEigenvalue ? 0.0 : std::sqrt(roots(i));
  }
  const Matrix sq =
      es.eigenvectors() * roots.cast<Complex>().asDiagonal() *
      es.eigenvectors().adjoint();
  const Matrix m = sq * yy * sq.conjugate();
  Eigen::VectorXd lam = Eigen::JacobiSVD<Matrix>(m).singularValues();
  std::sort(lam.data(), lam.data() + lam.size(), std::greater<>());
  return std::max(0.0, lam(0) - lam(1) - lam(2) - lam(3));
}

double formation_two_qubit(const Matrix& rho) {
  const double c = std::min(1.0, concurrence(rho));
  const double x = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
  return binary_entropy(std::clamp(x, 0.0, 1.0));
}

std::optional<Matrix> effective_two_qubit(const AnyState& sigma,
                                          PartySet side) {
  const auto& layout = layout_of(sigma);
  layout.require_proper(side);
  const auto rest = side.complement(layout.num_parties());
  const auto vs = two_dim_support(partial_trace(sigma, side));
  const auto vr = two_dim_support(partial_trace(sigma, rest));
  if (!vs || !vr) return std::nullopt;

  std::vector<std::size_t> order = side.members();
  for (auto p : rest.members()) order.push_back(p);
  const Matrix full = permute_parties(to_mixed(sigma), order).matrix();

  const auto ds = static_cast<Eigen::Index>(layout.dim_of(side));
  const auto dr = static_cast<Eigen::Index>(layout.dim_of(rest));
  Matrix basis(ds * dr, 4);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (Eigen::Index i = 0; i < ds; ++i) {
        basis.block(i * dr, 2 * a + b, dr, 1) = (*vs)(i, a) * vr->col(b);
      }
    }
  }
  return Matrix(basis.adjoint() * full * basis);
}

GhzDistillBound ghz_rate_lower(const AnyState& sigma,
                               std::optional<std::size_t> alice,
                               std::optional<std::size_t> pivot,
                               std::optional<double> e_c_override) {
  const auto& layout = layout_of(sigma);
  const auto n = layout.num_parties();
  if (n < 3) throw ArgumentError("GHZ distillation needs at least 3 parties");
  const std::size_t a = alice.value_or(0);
  if (a >= n) throw ArgumentError("alice index out of range");
  const std::size_t p = pivot.value_or(a == 0 ? 1 : 0);
  if (p >= n || p == a) throw ArgumentError("pivot must be a Bob");

  GhzDistillBound out{};
  out.parties = n;
  out.alice = a;
  out.pivot = p;
  if (e_c_override) {
    if (!(*e_c_override >= 0.0)) {
      throw ArgumentError("entanglement cost override must be >= 0");
    }
    out.e_c = *e_c_override;
    out.surrogate = Surrogate::kUserSupplied;
  } else if (globally_pure(sigma)) {
    out.e_c = single_entropy(sigma, p);
    out.surrogate = Surrogate::kExactPure;
  } else if (auto m = effective_two_qubit(sigma, PartySet::single(p))) {
    out.e_c = formation_two_qubit(*m);
    out.surrogate = Surrogate::kFormation2x2;
  } else {
    const auto cut = layout.name_of(PartySet::single(p)) + "|" +
                     layout.name_of(PartySet::single(p).complement(n));
    throw NeedsInputError("entanglement cost across " + cut +
                              " is not computable; supply it explicitly",
                          cut);
  }

  std::vector<std::pair<std::size_t, double>> shares{{p, out.e_c}};
  double den = out.e_c;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == a || j == p) continue;
    const double s = single_entropy(sigma, j);
    shares.emplace_back(j, s);
    den += s;
  }
  if (is_zero_entropy(den)) {
    out.rate_lower = kInfinity;
    out.unbounded = true;
    out.note = "target is fully product; any rate is achievable";
    for (const auto& [bob, v] : shares) out.split.push_back({bob, 0.0});
    return out;
  }
  out.rate_lower = 1.0 / den;
  for (const auto& [bob, v] : shares) {
    out.split.push_back({bob, out.rate_lower * v});
  }
  return out;
}

GhzDistillBound best_ghz_bound(const AnyState& sigma,
                               std::optional<std::size_t> alice,
                               std::optional<std::size_t> pivot,
                               std::optional<double> e_c_override) {
  if (e_c_override && !pivot) {
    throw ArgumentError("an entanglement cost override needs a fixed pivot");
  }
  const auto n = layout_of(sigma).num_parties();
  std::optional<GhzDistillBound> best;
  std::optional<NeedsInputError> missing;
  for (std::size_t a = 0; a < n; ++a) {
    if (alice && a != *alice) continue;
    for (std::size_t p = 0; p < n; ++p) {
      if (p == a || (pivot && p != *pivot)) continue;
      try {
        auto b = ghz_rate_lower(sigma, a, p, e_c_override);
        if (!best || b.rate_lower > best->rate_lower) best = std::move(b);
      } catch (const NeedsInputError& e) {
        if (!missing) missing = e;
      }
    }
  }
  if (!best) {
    if (missing) throw *missing;
    throw ArgumentError("no valid Alice/pivot assignment");
  }
  return *best;
}

bool ghz_combing_feasible(const std::vector<double>& splits) {
  double sum = 0.0;
  for (double e : splits) {
    if (e < 0.0) throw ArgumentError("split entries must be >= 0");
    sum += e;
  }
  return sum <= 1.0 + tol::kRate;
}

}  // namespace mprates::ghz
