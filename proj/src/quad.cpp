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

#include "mprates/quad.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "mprates/errors.hpp"
#include "mprates/ratio.hpp"

namespace mprates::quad {

namespace {

constexpr double kCaseTol = 1e-12;

// A rate triple together with the convex weights that produce it.
struct Mix {
  std::array<double, 6> w{};
  RateTriple t;
};

Mix pure_line(const std::array<RateTriple, 6>& base, int j) {
  Mix m;
  m.w[static_cast<std::size_t>(j)] = 1.0;
  m.t = base[static_cast<std::size_t>(j)];
  return m;
}

// Convex combination of `hi` and `lo` whose coordinate `k` equals `level`,
// given hi.e[k] >= level >= lo.e[k].
Mix mix_to_level(const Mix& hi, const Mix& lo, std::size_t k, double level) {
  const double span = hi.t.e[k] - lo.t.e[k];
  double w = 1.0;
  if (span > 0.0) w = std::clamp((level - lo.t.e[k]) / span, 0.0, 1.0);
  Mix out;
  for (std::size_t j = 0; j < 6; ++j) out.w[j] = w * hi.w[j] + (1 - w) * lo.w[j];
  for (std::size_t i = 0; i < 3; ++i) {
    out.t.e[i] = w * hi.t.e[i] + (1 - w) * lo.t.e[i];
  }
  return out;
}

}  // namespace

void require_four_party(const EntropyProfile& psi, const EntropyProfile& phi) {
  const auto n = std::max(psi.num_parties(), phi.num_parties());
  if (n >= 5) {
    throw NotImplementedError(
        "catalytic bound for five or more parties is only conjectured; not "
        "implemented");
  }
  if (psi.num_parties() != 4 || phi.num_parties() != 4) {
    throw ArgumentError("four-party planner needs four-party profiles");
  }
  if (psi.layout().parties() != phi.layout().parties()) {
    throw ArgumentError("source and target declare different party labels");
  }
  if (!psi.pure() || !phi.pure()) {
    throw ArgumentError("four-party planner needs pure source and target");
  }
}

Roles make_roles(std::size_t alice, std::optional<std::size_t> pivot) {
  if (alice > 3) throw ArgumentError("alice index out of range");
  std::vector<std::size_t> bobs;
  for (std::size_t p = 0; p < 4; ++p) {
    if (p != alice && (!pivot || p != *pivot)) bobs.push_back(p);
  }
  if (pivot) {
    if (*pivot > 3 || *pivot == alice) {
      throw ArgumentError("pivot must be one of the Bobs");
    }
    bobs.push_back(*pivot);
  }
  return {alice, {bobs[0], bobs[1], bobs[2]}};
}

const std::array<std::array<int, 3>, 6>& merge_orders() {
  static const std::array<std::array<int, 3>, 6> orders{{{0, 1, 2},
                                                         {0, 2, 1},
                                                         {2, 0, 1},
                                                         {1, 0, 2},
                                                         {1, 2, 0},
                                                         {2, 1, 0}}};
  return orders;
}

std::array<RateTriple, 6> base_triples(const EntropyProfile& psi,
                                       const Roles& r) {
  if (psi.num_parties() != 4) {
    throw ArgumentError("base triples need a four-party profile");
  }
  const auto A = PartySet::single(r.alice);
  const auto B1 = PartySet::single(r.bobs[0]);
  const auto B2 = PartySet::single(r.bobs[1]);
  const auto B3 = PartySet::single(r.bobs[2]);
  auto S = [&](PartySet s) { return psi.at(s); };
  const double sA = S(A);
  const double sAB1 = S(A | B1);
  const double sAB2 = S(A | B2);
  const double sAB3 = S(A | B3);
  const double sAB1B2 = S(A | B1 | B2);
  const double sAB1B3 = S(A | B1 | B3);
  const double sAB2B3 = S(A | B2 | B3);
  return {{
      {{sA - sAB1, sAB1 - sAB1B2, sAB1B2}, 1},
      {{sA - sAB1, sAB1B3, sAB1 - sAB1B3}, 2},
      {{sAB3 - sAB1B3, sAB1B3, sA - sAB3}, 3},
      {{sAB2 - sAB1B2, sA - sAB2, sAB1B2}, 4},
      {{sAB2B3, sA - sAB2, sAB2 - sAB2B3}, 5},
      {{sAB2B3, sAB3 - sAB2B3, sA - sAB3}, 6},
  }};
}

bool verify_triple_ordering(const std::array<RateTriple, 6>& t) {
  auto ge = [](double a, double b) { return a >= b - tol::kRate; };
  return ge(t[0].e[2], t[1].e[2]) && ge(t[1].e[2], t[2].e[2]) &&
         ge(t[3].e[2], t[4].e[2]) && ge(t[4].e[2], t[5].e[2]);
}

GValue compute_g(const EntropyProfile& psi, const EntropyProfile& phi,
                 std::size_t alice) {
  require_four_party(psi, phi);
  if (alice > 3) throw ArgumentError("alice index out of range");
  const auto bobs = PartySet::all(4) - PartySet::single(alice);
  bool any_denominator = false;
  bool any_term = false;
  GValue out{kInfinity, PartySet{}};
  for (std::uint32_t b = 1; b < 16; ++b) {
    const PartySet x(b);
    if (!x.subset_of(bobs)) continue;
    double den = 0.0;
    for (auto i : x.members()) den += phi.single(i);
    if (!is_zero_entropy(den)) any_denominator = true;
    const auto r = entropy_ratio(psi.at(x), den);
    if (!r) continue;
    any_term = true;
    if (*r < out.value || out.witness.empty()) {
      out.witness = x;
      out.value = *r;
    }
  }
  if (!any_denominator || !any_term) {
    throw DegenerateError("every Bob of the target is unentangled");
  }
  return out;
}

Plan plan(const EntropyProfile& psi, const EntropyProfile& phi,
          const Roles& roles) {
  require_four_party(psi, phi);
  const auto g = compute_g(psi, phi, roles.alice);
  if (std::isinf(g.value)) {
    throw DegenerateError("lower bound is unbounded; no finite plan");
  }

  Plan out{};
  out.roles = roles;
  out.g = g.value;
  out.base = base_triples(psi, roles);
  if (!verify_triple_ordering(out.base)) {
    throw InternalError("merging triples violate the entropy ordering");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    out.targets[i] = g.value * phi.single(roles.bobs[i]);
  }
  out.compress_rates = out.targets;

  const double c = out.targets[2];
  const auto& base = out.base;
  auto at_most = [&](int j) { return base[static_cast<std::size_t>(j)].e[2] <= c + kCaseTol; };

  // Classification on the pivot coordinate. Orders 3 and 6 share E3, and
  // orders 1 and 4 always reach the pivot target.
  if (!at_most(2)) {
    out.case_id = 5;
  } else {
    const bool low2 = at_most(1);
    const bool low5 = at_most(4);
    out.case_id = low2 ? (low5 ? 1 : 2) : (low5 ? 3 : 4);
  }

  Mix first;
  Mix second;
  switch (out.case_id) {
    case 1:
      first = mix_to_level(pure_line(base, 0), pure_line(base, 1), 2, c);
      second = mix_to_level(pure_line(base, 3), pure_line(base, 4), 2, c);
      break;
    case 2:
      first = mix_to_level(pure_line(base, 0), pure_line(base, 1), 2, c);
      second = mix_to_level(pure_line(base, 4), pure_line(base, 5), 2, c);
      break;
    case 3:
      first = mix_to_level(pure_line(base, 1), pure_line(base, 2), 2, c);
      second = mix_to_level(pure_line(base, 3), pure_line(base, 4), 2, c);
      break;
    case 4:
      first = mix_to_level(pure_line(base, 1), pure_line(base, 2), 2, c);
      second = mix_to_level(pure_line(base, 4), pure_line(base, 5), 2, c);
      break;
    default:
      first = pure_line(base, 2);
      second = pure_line(base, 5);
      break;
  }

  Mix final_mix = second;
  out.pivot_mix = second.t.e[1] < out.targets[1];
  if (out.pivot_mix) {
    if (first.t.e[1] < out.targets[1] - tol::kRate) {
      throw InternalError("intermediate triple misses the second-Bob target");
    }
    final_mix = mix_to_level(first, second, 1, out.targets[1]);
  }

  out.weights = final_mix.w;
  double wsum = 0.0;
  for (double w : out.weights) wsum += w;
  for (double& w : out.weights) w /= wsum;
  out.achieved.origin = 0;
  for (std::size_t j = 0; j < 6; ++j) {
    for (std::size_t i = 0; i < 3; ++i) {
      out.achieved.e[i] += out.weights[j] * base[j].e[i];
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (out.achieved.e[i] < out.targets[i] - tol::kRate) {
      throw InternalError("four-party plan misses target for Bob " +
                          std::to_string(i + 1) + " in case " +
                          std::to_string(out.case_id));
    }
  }

  out.catalyst_budget = 0.0;
  out.catalyst_per_pair = {0.0, 0.0, 0.0};
  for (std::size_t j = 0; j < 6; ++j) {
    if (out.weights[j] <= 0.0) continue;
    double consumed = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      const double need = std::max(0.0, -base[j].e[i]);
      consumed += need;
      out.catalyst_per_pair[i] = std::max(out.catalyst_per_pair[i], need);
    }
    out.catalyst_budget = std::max(out.catalyst_budget, consumed);
  }
  return out;
}

UpperBound upper_bound(const EntropyProfile& psi, const EntropyProfile& phi) {
  require_four_party(psi, phi);
  UpperBound out{kInfinity, {}};
  std::vector<std::pair<PartySet, double>> ratios;
  for (std::uint32_t b = 1; b < 15; ++b) {
    const PartySet t(b);
    if (auto r = entropy_ratio(psi.at(t), phi.at(t))) {
      ratios.emplace_back(t, *r);
      out.value = std::min(out.value, *r);
    }
  }
  if (ratios.empty()) {
    throw DegenerateError("source and target are both fully product");
  }
  for (const auto& [t, r] : ratios) {
    if (std::abs(r - out.value) <= 1e-12 * std::max(1.0, std::abs(out.value)) ||
        r == out.value) {
      out.witnesses.push_back(t);
    }
  }
  return out;
}

Bound best_bound(const EntropyProfile& psi, const EntropyProfile& phi) {
  require_four_party(psi, phi);
  std::array<double, 4> per_alice{};
  std::size_t best = 0;
  for (std::size_t a = 0; a < 4; ++a) {
    per_alice[a] = compute_g(psi, phi, a).value;
    if (per_alice[a] > per_alice[best]) best = a;
  }
  Bound out{per_alice[best], per_alice, best, plan(psi, phi, make_roles(best)),
            upper_bound(psi, phi), false};
  out.exact = std::abs(out.upper.value - out.lower) <= tol::kRate;
  return out;
}

Bound best_bound(const PureState& psi, const PureState& phi) {
  return best_bound(entropy_profile(psi), entropy_profile(phi));
}

double oracle_max_min(const std::array<RateTriple, 6>& triples,
                      const std::array<double, 3>& s) {
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!is_zero_entropy(s[i])) active.push_back(i);
  }
  if (active.empty()) return kInfinity;

  // Variables x = (w_0..w_5, t). Inequalities a.x <= 0:
  //   -w_j <= 0                              (rows 0..5)
  //   t s_i - sum_j w_j E_i^j <= 0           (one row per active i)
  // plus the equality sum_j w_j = 1.
  const int nvar = 7;
  std::vector<Eigen::Matrix<double, 1, 7>> rows;
  for (int j = 0; j < 6; ++j) {
    Eigen::Matrix<double, 1, 7> a = Eigen::Matrix<double, 1, 7>::Zero();
    a(j) = -1.0;
    rows.push_back(a);
  }
  for (auto i : active) {
    Eigen::Matrix<double, 1, 7> a;
    for (int j = 0; j < 6; ++j) a(j) = -triples[static_cast<std::size_t>(j)].e[i];
    a(6) = s[i];
    rows.push_back(a);
  }
  const int m = static_cast<int>(rows.size());

  double best = -kInfinity;
  // Every vertex makes the equality and nvar - 1 inequalities tight.
  std::vector<bool> pick(static_cast<std::size_t>(m), false);
  std::fill(pick.begin(), pick.begin() + (nvar - 1), true);
  do {
    Eigen::Matrix<double, 7, 7> lhs;
    Eigen::Matrix<double, 7, 1> rhs = Eigen::Matrix<double, 7, 1>::Zero();
    int r = 0;
    for (int k = 0; k < m; ++k) {
      if (pick[static_cast<std::size_t>(k)]) lhs.row(r++) = rows[static_cast<std::size_t>(k)];
    }
    lhs.row(6) << 1, 1, 1, 1, 1, 1, 0;
    rhs(6) = 1.0;
    Eigen::FullPivLU<Eigen::Matrix<double, 7, 7>> lu(lhs);
    if (!lu.isInvertible()) continue;
    const Eigen::Matrix<double, 7, 1> x = lu.solve(rhs);
    bool ok = true;
    for (int k = 0; k < m && ok; ++k) {
      ok = rows[static_cast<std::size_t>(k)].dot(x.transpose()) <= 1e-10;
    }
    if (ok) best = std::max(best, x(6));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

}  // namespace mprates::quad
