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


#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace oracle {

namespace {

std::vector<int> digits_of(std::size_t index, const std::vector<int>& dims) {
  std::vector<int> d(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    d[k] = static_cast<int>(index % static_cast<std::size_t>(dims[k]));
    index /= static_cast<std::size_t>(dims[k]);
  }
  return d;
}

// Index within the sub-register selected by `mask`, first party most
// significant.
std::size_t sub_index(const std::vector<int>& digits,
                      const std::vector<int>& dims, std::uint32_t mask) {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if ((mask >> k) & 1u) idx = idx * static_cast<std::size_t>(dims[k]) + static_cast<std::size_t>(digits[k]);
  }
  return idx;
}

std::size_t sub_dim(const std::vector<int>& dims, std::uint32_t mask) {
  std::size_t d = 1;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if ((mask >> k) & 1u) d *= static_cast<std::size_t>(dims[k]);
  }
  return d;
}

std::size_t total_dim(const std::vector<int>& dims) {
  return sub_dim(dims, (1u << dims.size()) - 1);
}

}  // namespace

CMatrix naive_partial_trace(const CVector& psi, const std::vector<int>& dims,
                            std::uint32_t keep) {
  const auto n = total_dim(dims);
  const auto dk = sub_dim(dims, keep);
  const std::uint32_t rest = ((1u << dims.size()) - 1) & ~keep;
  CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
  for (std::size_t i = 0; i < n; ++i) {
    const auto di = digits_of(i, dims);
    for (std::size_t j = 0; j < n; ++j) {
      const auto dj = digits_of(j, dims);
      if (sub_index(di, dims, rest) != sub_index(dj, dims, rest)) continue;
      out(static_cast<Eigen::Index>(sub_index(di, dims, keep)),
          static_cast<Eigen::Index>(sub_index(dj, dims, keep))) +=
          psi(static_cast<Eigen::Index>(i)) * std::conj(psi(static_cast<Eigen::Index>(j)));
    }
  }
  return out;
}

CMatrix naive_partial_trace(const CMatrix& rho, const std::vector<int>& dims,
                            std::uint32_t keep) {
  const auto n = total_dim(dims);
  const auto dk = sub_dim(dims, keep);
  const std::uint32_t rest = ((1u << dims.size()) - 1) & ~keep;
  CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
  for (std::size_t i = 0; i < n; ++i) {
    const auto di = digits_of(i, dims);
    for (std::size_t j = 0; j < n; ++j) {
      const auto dj = digits_of(j, dims);
      if (sub_index(di, dims, rest) != sub_index(dj, dims, rest)) continue;
      out(static_cast<Eigen::Index>(sub_index(di, dims, keep)),
          static_cast<Eigen::Index>(sub_index(dj, dims, keep))) +=
          rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

double schmidt_entropy(const CVector& psi, const std::vector<int>& dims,
                       std::uint32_t side) {
  const std::uint32_t rest = ((1u << dims.size()) - 1) & ~side;
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(sub_dim(dims, side)),
                            static_cast<Eigen::Index>(sub_dim(dims, rest)));
  for (std::size_t i = 0; i < total_dim(dims); ++i) {
    const auto d = digits_of(i, dims);
    m(static_cast<Eigen::Index>(sub_index(d, dims, side)),
      static_cast<Eigen::Index>(sub_index(d, dims, rest))) = psi(static_cast<Eigen::Index>(i));
  }
  Eigen::JacobiSVD<CMatrix> svd(m);
  std::vector<double> p;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
    p.push_back(svd.singularValues()(k) * svd.singularValues()(k));
  }
  return shannon_bits(p);
}

double shannon_bits(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 1e-15) h -= x * std::log2(x);
  }
  return h;
}

std::array<std::array<double, 2>, 2> combing_front(double a, double b,
                                                   double c) {
  const double lo = std::max(0.0, a - c);
  const double hi = std::min(a, b);
  return {{{lo, a - lo}, {hi, a - hi}}};
}

double sampled_max_min(const std::array<std::array<double, 3>, 6>& triples,
                       const std::array<double, 3>& s, int samples,
                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  double best = -1e300;
  for (int k = 0; k < samples; ++k) {
    std::array<double, 6> w{};
    double total = 0.0;
    for (auto& x : w) {
      x = expo(rng);
      // Sparse weights reach the polytope's edges and vertices.
      if (k % 3 == 0 && (rng() & 1u)) x = 0.0;
      total += x;
    }
    if (total <= 0.0) continue;
    double worst = 1e300;
    for (std::size_t i = 0; i < 3; ++i) {
      if (s[i] <= 1e-9) continue;
      double e = 0.0;
      for (std::size_t j = 0; j < 6; ++j) e += w[j] / total * triples[j][i];
      worst = std::min(worst, e / s[i]);
    }
    best = std::max(best, worst);
  }
  return best;
}

double werner_concurrence(double p) { return std::max(0.0, (3.0 * p - 1.0) / 2.0); }

CMatrix werner_state(double p) {
  CMatrix rho = CMatrix::Identity(4, 4) * ((1.0 - p) / 4.0);
  rho(0, 0) += p / 2;
  rho(3, 3) += p / 2;
  rho(0, 3) += p / 2;
  rho(3, 0) += p / 2;
  return rho;
}

double page_average_bits(int da, int db) {
  const int m = std::min(da, db), n = std::max(da, db);
  double s = 0.0;
  for (int k = n + 1; k <= m * n; ++k) s += 1.0 / k;
  s -= (m - 1.0) / (2.0 * n);
  return s / std::log(2.0);
}

}  // namespace oracle
