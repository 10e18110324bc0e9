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

#include "mprates/tripartite.hpp"

#include <algorithm>
#include <cmath>

#include "mprates/errors.hpp"
#include "mprates/ratio.hpp"

namespace mprates::tri {

namespace {

bool ties(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b));
}

std::array<double, 3> singles(const EntropyProfile& p) {
  return {p.single(0), p.single(1), p.single(2)};
}

std::pair<std::size_t, std::size_t> others(std::size_t hub) {
  switch (hub) {
    case 0:
      return {1, 2};
    case 1:
      return {0, 2};
    default:
      return {0, 1};
  }
}

}  // namespace

std::string describe(Term t) {
  switch (t) {
    case Term::kHub:
      return "hub";
    case Term::kFirst:
      return "first";
    case Term::kSecond:
      return "second";
  }
  return "?";
}

void require_matching(const EntropyProfile& psi, const EntropyProfile& phi,
                      std::size_t n) {
  if (psi.num_parties() != n || phi.num_parties() != n) {
    throw ArgumentError("expected " + std::to_string(n) +
                        "-party profiles, got " +
                        std::to_string(psi.num_parties()) + " and " +
                        std::to_string(phi.num_parties()));
  }
  if (psi.layout().parties() != phi.layout().parties()) {
    throw ArgumentError("source and target declare different party labels");
  }
  if (!psi.pure() || !phi.pure()) {
    throw ArgumentError("entropy-ratio bounds need pure source and target");
  }
}

double bipartite_rate(double psi_entropy, double phi_entropy) {
  if (is_zero_entropy(phi_entropy)) {
    throw DomainError(
        "target is a product state; any rate is achievable (handle the "
        "trivial rate separately)");
  }
  return psi_entropy / phi_entropy;
}

double bipartite_rate(const EntropyProfile& psi, const EntropyProfile& phi) {
  require_matching(psi, phi, 2);
  return bipartite_rate(psi.single(0), phi.single(0));
}

UpperBound upper_bound(const EntropyProfile& psi, const EntropyProfile& phi) {
  require_matching(psi, phi, 3);
  const auto sp = singles(psi);
  const auto sf = singles(phi);
  UpperBound out{kInfinity, {}, {}};
  bool any = false;
  for (std::size_t x = 0; x < 3; ++x) {
    out.ratios[x] = entropy_ratio(sp[x], sf[x]);
    if (!out.ratios[x]) continue;
    any = true;
    out.value = std::min(out.value, *out.ratios[x]);
  }
  if (!any) {
    throw DegenerateError("source and target are both fully product");
  }
  for (std::size_t x = 0; x < 3; ++x) {
    if (out.ratios[x] && ties(*out.ratios[x], out.value)) {
      out.witnesses.push_back(x);
    }
  }
  return out;
}

LowerBound lower_bound(const EntropyProfile& psi, const EntropyProfile& phi) {
  require_matching(psi, phi, 3);
  const auto sp = singles(psi);
  const auto sf = singles(phi);
  if (std::all_of(sf.begin(), sf.end(), is_zero_entropy)) {
    throw DegenerateError(
        "target is fully product; every lower-bound denominator vanishes");
  }
  LowerBound out{-kInfinity, {}, {}};
  std::array<std::array<std::optional<double>, 3>, 3> terms;
  for (std::size_t hub = 0; hub < 3; ++hub) {
    const auto [y, z] = others(hub);
    terms[hub] = {entropy_ratio(sp[hub], sf[y] + sf[z]),
                  entropy_ratio(sp[y], sf[y]), entropy_ratio(sp[z], sf[z])};
    double m = kInfinity;
    for (const auto& t : terms[hub]) {
      if (t) m = std::min(m, *t);
    }
    out.per_hub[hub] = m;
    out.value = std::max(out.value, m);
  }
  for (std::size_t hub = 0; hub < 3; ++hub) {
    if (!ties(out.per_hub[hub], out.value)) continue;
    for (std::size_t k = 0; k < 3; ++k) {
      if (terms[hub][k] && ties(*terms[hub][k], out.per_hub[hub])) {
        out.witnesses.push_back({hub, static_cast<Term>(k)});
      }
    }
  }
  return out;
}

RateBound best_bounds(const EntropyProfile& psi, const EntropyProfile& phi) {
  const auto lo = lower_bound(psi, phi);
  const auto up = upper_bound(psi, phi);
  RateBound out;
  out.lower = lo.value;
  out.upper = up.value;
  out.lower_witnesses = lo.witnesses;
  out.upper_witnesses = up.witnesses;
  out.per_hub = lo.per_hub;
  out.ratios = up.ratios;
  for (std::size_t x = 0; x < 3; ++x) {
    if (is_zero_entropy(psi.single(x)) && is_zero_entropy(phi.single(x))) {
      out.common_product_party = x;
      break;
    }
  }
  if (out.common_product_party) {
    // Both states live on the remaining pair; the exact bipartite rate applies.
    const auto [y, z] = others(*out.common_product_party);
    (void)z;
    const double r = bipartite_rate(psi.single(y), phi.single(y));
    out.lower = out.upper = r;
  }
  out.tight = std::isinf(out.upper)
                  ? std::isinf(out.lower)
                  : std::abs(out.upper - out.lower) <= tol::kRate;
  if (out.tight) out.exact_rate = out.upper;
  if (out.lower > out.upper + tol::kRate) {
    throw InternalError("lower bound exceeds upper bound");
  }
  return out;
}

RateBound best_bounds(const PureState& psi, const PureState& phi) {
  return best_bounds(entropy_profile(psi), entropy_profile(phi));
}

ProtocolPlan plan_protocol(const EntropyProfile& psi,
                           const EntropyProfile& phi) {
  const auto lo = lower_bound(psi, phi);
  if (std::isinf(lo.value)) {
    throw DegenerateError("lower bound is unbounded; no finite protocol");
  }
  const auto sf = singles(phi);
  const std::size_t hub = lo.witnesses.front().hub;
  auto [y, z] = others(hub);
  // The bipartite conversion needs an entangled partner.
  if (is_zero_entropy(sf[z]) && !is_zero_entropy(sf[y])) std::swap(y, z);

  ProtocolPlan out{};
  out.r = lo.value;
  out.hub = hub;
  out.mu_partner = y;
  out.nu_partner = z;
  out.targets = {out.r * sf[y], out.r * sf[z]};

  const auto view = permute_profile(psi, {hub, y, z});
  if (!combing::feasible(view, out.targets)) {
    throw InternalError("protocol combing targets violate the combing region");
  }
  out.combing = combing::plan(view, out.targets);
  out.convert_rate = out.targets.e_nu / sf[z];
  out.compress_rate = out.r * sf[y];
  out.teleport_budget = out.targets.e_mu;
  out.teleport_step = !is_zero_entropy(sf[y]);
  if (std::abs(out.compress_rate - out.teleport_budget) > tol::kRate ||
      std::abs(out.convert_rate - out.r) > tol::kRate) {
    throw InternalError("protocol rates are inconsistent");
  }
  return out;
}

ProtocolPlan plan_protocol(const PureState& psi, const PureState& phi) {
  return plan_protocol(entropy_profile(psi), entropy_profile(phi));
}

ReversibilityReport reversibility_gap(const EntropyProfile& psi,
                                      const EntropyProfile& phi) {
  ReversibilityReport out{best_bounds(psi, phi), best_bounds(phi, psi),
                          Reversibility::kUndetermined, ""};
  if (out.forward.common_product_party) {
    out.note =
        "states share a product cut; the bipartite rate is reversible, which "
        "this diagnostic does not certify";
    return out;
  }
  if (!out.forward.tight) {
    out.note = "forward bounds are not tight";
    return out;
  }
  if (!(out.forward.lower > 0.0) || std::isinf(out.forward.lower)) {
    out.note = "forward rate is zero or unbounded";
    return out;
  }
  const double inverse = 1.0 / out.forward.lower;
  if (out.backward.upper < inverse - tol::kRate) {
    out.verdict = Reversibility::kIrreversible;
    out.note = "backward upper bound lies strictly below 1/R(forward)";
  } else {
    out.note = "backward upper bound does not separate from 1/R(forward)";
  }
  return out;
}

ReversibilityReport reversibility_gap(const PureState& psi,
                                      const PureState& phi) {
  return reversibility_gap(entropy_profile(psi), entropy_profile(phi));
}

MixedUpperBound upper_bound_mixed(
    const std::vector<BipartitionValues>& values) {
  MixedUpperBound out{kInfinity, {}};
  std::vector<std::optional<double>> ratios;
  bool any = false;
  for (const auto& v : values) {
    if (v.source < 0.0 || v.target < 0.0) {
      throw ArgumentError("bipartition entanglement values must be >= 0");
    }
    ratios.push_back(entropy_ratio(v.source, v.target));
    if (!ratios.back()) continue;
    any = true;
    out.value = std::min(out.value, *ratios.back());
  }
  if (!any) {
    throw DegenerateError(
        "every bipartition has zero entanglement in both states");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (ratios[i] && ties(*ratios[i], out.value)) {
      out.witnesses.push_back(values[i].side);
    }
  }
  return out;
}

std::vector<BipartitionValues> pure_bipartition_values(
    const EntropyProfile& source, const EntropyProfile& target) {
  require_matching(source, target, source.num_parties());
  std::vector<BipartitionValues> out;
  const auto full = source.layout().all();
  for (std::uint32_t b = 1; b < full.bits(); ++b) {
    const PartySet side(b);
    if (!side.contains(0)) continue;
    out.push_back({side, source.at(side), target.at(side)});
  }
  return out;
}

}  // namespace mprates::tri
