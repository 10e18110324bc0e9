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

#include "mprates/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "mprates/combing.hpp"
#include "mprates/entropy.hpp"
#include "mprates/errors.hpp"
#include "mprates/ghz_distill.hpp"
#include "mprates/quad.hpp"
#include "mprates/ratio.hpp"
#include "mprates/tripartite.hpp"

namespace mprates::verify {

namespace {

constexpr double kEntropyTol = 1e-8;
constexpr double kRateTol = 1e-9;
constexpr double kExactTol = 1e-12;

// Check results of one trial; merged across trials in trial order.
class Log {
 public:
  Log(std::size_t trial, std::uint64_t seed, double tol)
      : trial_(trial), seed_(seed), tol_(tol) {}

  // `violation` > 0 means the property is broken by that amount.
  void check(const std::string& id, double violation,
             std::vector<double> observed, double tol = -1.0) {
    if (std::isnan(violation)) violation = kInfinity;
    auto& s = stats_[id];
    s.id = id;
    ++s.evaluated;
    const double v = std::max(0.0, violation);
    s.max_violation = std::max(s.max_violation, v);
    if (v > (tol >= 0.0 ? tol : tol_)) {
      ++s.failed;
      failures_.push_back({trial_, seed_, id, std::move(observed), v});
    }
  }

  std::map<std::string, CheckStat> stats_;
  std::vector<Failure> failures_;

 private:
  std::size_t trial_;
  std::uint64_t seed_;
  double tol_;
};

SubsystemLayout layout_for(const std::vector<int>& dims) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    labels.emplace_back(1, static_cast<char>('A' + i));
  }
  return SubsystemLayout(labels, dims);
}

MixedState purified_sample(const SubsystemLayout& layout, Rng& rng) {
  const int anc = static_cast<int>(std::min<std::size_t>(layout.total_dim(), 16));
  return random_mixed_state(layout, anc, rng);
}

// Every assignment of parties to {unused, X, Y, Z}; `fn` sees (X, Y, Z).
void for_each_partition3(std::size_t n,
                         const std::function<void(PartySet, PartySet, PartySet)>& fn) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 4;
  for (std::size_t code = 0; code < total; ++code) {
    PartySet part[4];
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 4) {
      part[c % 4] = part[c % 4] | PartySet::single(i);
    }
    fn(part[1], part[2], part[3]);
  }
}

void suite_ssa(Log& log, const SubsystemLayout& layout, Rng& rng) {
  const auto rho = purified_sample(layout, rng);
  const auto prof = entropy_profile(AnyState(rho), SubsystemLayout::kMaxParties);
  auto S = [&](PartySet s) { return s.empty() ? 0.0 : prof.at(s); };
  const auto n = layout.num_parties();
  for_each_partition3(n, [&](PartySet x, PartySet y, PartySet z) {
    if (x.empty() || y.empty() || z.empty()) return;
    const double lhs = S(x | y) + S(y | z);
    const double rhs = S(y) + S(x | y | z);
    log.check("ssa.strong-subadditivity", rhs - lhs, {lhs, rhs});
  });
  for (std::uint32_t b = 1; b <= layout.all().bits(); ++b) {
    const PartySet t(b);
    const double s = S(t);
    const double cap = std::log2(static_cast<double>(layout.dim_of(t)));
    log.check("ssa.range", std::max(-s, s - cap), {s, cap});
  }
}

void suite_subadditivity(Log& log, const SubsystemLayout& layout, Rng& rng) {
  const auto rho = purified_sample(layout, rng);
  const auto prof = entropy_profile(AnyState(rho), SubsystemLayout::kMaxParties);
  const auto n = layout.num_parties();
  for_each_partition3(n, [&](PartySet x, PartySet y, PartySet z) {
    if (x.empty() || y.empty() || !z.empty()) return;
    const double sx = prof.at(x), sy = prof.at(y), sxy = prof.at(x | y);
    log.check("subadditivity.subadditive", sxy - sx - sy, {sxy, sx, sy});
    log.check("subadditivity.araki-lieb", std::abs(sx - sy) - sxy,
              {sxy, sx, sy});
  });

  const auto psi = random_pure_state(layout, rng);
  const auto pp = entropy_profile(AnyState(psi), SubsystemLayout::kMaxParties);
  for (std::uint32_t b = 1; b < layout.all().bits(); ++b) {
    const PartySet t(b);
    const double s = pp.at(t), sc = pp.at(t.complement(n));
    log.check("subadditivity.complement", std::abs(s - sc), {s, sc});
  }

  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const auto party = pick(rng);
  const auto u = random_unitary(layout.dim(party), rng);
  const auto rotated = apply_local_unitary(psi, party, u);
  const auto rp = entropy_profile(AnyState(rotated), SubsystemLayout::kMaxParties);
  for (std::uint32_t b = 1; b < layout.all().bits(); ++b) {
    const PartySet t(b);
    log.check("subadditivity.local-unitary", std::abs(pp.at(t) - rp.at(t)),
              {pp.at(t), rp.at(t), static_cast<double>(party)});
  }
}

void suite_bound_order(Log& log, const SubsystemLayout& layout, Rng& rng) {
  const auto psi = random_pure_state(layout, rng);
  const auto phi = random_pure_state(layout, rng);
  const auto pp = entropy_profile(AnyState(psi));
  const auto fp = entropy_profile(AnyState(phi));
  const auto b = tri::best_bounds(pp, fp);
  log.check("bound-order.lower-le-upper", b.lower - b.upper,
            {b.lower, b.upper});

  const auto plan = tri::plan_protocol(pp, fp);
  const std::array<std::size_t, 3> idx{plan.hub, plan.mu_partner,
                                       plan.nu_partner};
  const double sa = pp.single(idx[0]), sb = pp.single(idx[1]),
               sc = pp.single(idx[2]);
  const auto& t = plan.targets;
  const double v = std::max({t.e_mu + t.e_nu - sa, t.e_mu - sb, t.e_nu - sc,
                             -plan.combing.slack.e_mu,
                             -plan.combing.slack.e_nu});
  log.check("bound-order.protocol-feasible", v, {t.e_mu, t.e_nu, sa, sb, sc});

  std::vector<std::size_t> order{0, 1, 2};
  std::shuffle(order.begin(), order.end(), rng);
  const auto bp = tri::best_bounds(permute_parties(psi, order),
                                   permute_parties(phi, order));
  log.check("bound-order.permutation",
            std::max(std::abs(bp.lower - b.lower), std::abs(bp.upper - b.upper)),
            {b.lower, bp.lower, b.upper, bp.upper}, kExactTol);

  // A per-hub minimum attained on a non-hub ratio forces tightness.
  bool coincide = false;
  for (std::size_t hub = 0; hub < 3; ++hub) {
    const std::size_t y = hub == 0 ? 1 : 0;
    const std::size_t z = hub == 2 ? 1 : 2;
    const auto h = entropy_ratio(pp.single(hub), fp.single(y) + fp.single(z));
    const auto ry = entropy_ratio(pp.single(y), fp.single(y));
    const auto rz = entropy_ratio(pp.single(z), fp.single(z));
    double m = kInfinity;
    for (const auto& r : {h, ry, rz}) {
      if (r) m = std::min(m, *r);
    }
    if ((ry && *ry == m) || (rz && *rz == m)) coincide = true;
  }
  if (coincide) {
    log.check("bound-order.coincidence", b.upper - b.lower, {b.lower, b.upper});
  }
}

double region_violation(double sa, double sb, double sc, double mu, double nu) {
  return std::max({mu + nu - sa, mu - sb, nu - sc, -mu, -nu});
}

void suite_combing_region(Log& log, const SubsystemLayout& layout, Rng& rng) {
  const auto psi = random_pure_state(layout, rng);
  const auto prof = entropy_profile(AnyState(psi));
  const double sa = prof.single(0), sb = prof.single(1), sc = prof.single(2);
  const auto branches = combing::merging_branches(prof);
  for (const auto& br : branches) {
    log.check("combing-region.vertices",
              region_violation(sa, sb, sc, br.e_mu, br.e_nu),
              {br.e_mu, br.e_nu, sa, sb, sc});
  }

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 20; ++k) {
    const double mu = unit(rng) * std::min(sa, sb);
    const double nu = unit(rng) * std::min(sc, sa - mu);
    const auto p = combing::plan(prof, {mu, nu});
    const double v = std::max(
        {region_violation(sa, sb, sc, p.achieved.e_mu, p.achieved.e_nu),
         -p.slack.e_mu, -p.slack.e_nu});
    log.check("combing-region.plan-dominates", v,
              {mu, nu, p.achieved.e_mu, p.achieved.e_nu});
  }

  const auto swapped = combing::merging_branches(combing::relabel(prof, 0, true));
  double worst = 0.0;
  for (const auto& br : branches) {
    double best = kInfinity;
    for (const auto& sw : swapped) {
      best = std::min(best, std::max(std::abs(br.e_mu - sw.e_nu),
                                     std::abs(br.e_nu - sw.e_mu)));
    }
    worst = std::max(worst, best);
  }
  log.check("combing-region.relabel", worst, {worst}, kExactTol);
}

void corrupt(std::array<quad::RateTriple, 6>& t) {
  for (auto& r : t) {
    r.e[0] -= 0.25;
    r.e[2] -= 0.5;
  }
  std::swap(t[0].e, t[2].e);
}

void suite_triple_order(Log& log, const SubsystemLayout& layout, Rng& rng,
                        bool corrupted) {
  const auto psi = random_pure_state(layout, rng);
  const auto prof = entropy_profile(AnyState(psi));
  for (std::size_t alice = 0; alice < 4; ++alice) {
    const auto roles = quad::make_roles(alice);
    auto t = quad::base_triples(prof, roles);
    if (corrupted) corrupt(t);
    const double sa = prof.single(alice);
    for (const auto& r : t) {
      log.check("triple-order.sum", std::abs(r.sum() - sa), {r.sum(), sa});
    }
    const double v = std::max({t[1].e[2] - t[0].e[2], t[2].e[2] - t[1].e[2],
                               t[4].e[2] - t[3].e[2], t[5].e[2] - t[4].e[2]});
    log.check("triple-order.ordering", v,
              {t[0].e[2], t[1].e[2], t[2].e[2], t[3].e[2], t[4].e[2], t[5].e[2]});
    if (quad::verify_triple_ordering(t) != (v <= tol::kRate)) {
      log.check("triple-order.ordering", kInfinity, {v});
    }
  }
}

PureState append_idle_qubit(const PureState& psi) {
  auto dims = psi.layout().dims();
  auto labels = psi.layout().parties();
  dims.push_back(2);
  labels.push_back("_idle");
  Vector amp = Vector::Zero(2 * psi.amplitudes().size());
  for (Eigen::Index i = 0; i < psi.amplitudes().size(); ++i) {
    amp(2 * i) = psi.amplitudes()(i);
  }
  return PureState(SubsystemLayout(labels, dims), amp);
}

void suite_quad_plan(Log& log, const SubsystemLayout& layout, Rng& rng,
                     bool corrupted) {
  const auto psi = random_pure_state(layout, rng);
  const auto phi = random_pure_state(layout, rng);
  const auto pp = entropy_profile(AnyState(psi));
  const auto fp = entropy_profile(AnyState(phi));
  const auto up = quad::upper_bound(pp, fp);
  for (std::size_t alice = 0; alice < 4; ++alice) {
    const auto plan = quad::plan(pp, fp, quad::make_roles(alice));
    double dom = -kInfinity;
    for (std::size_t i = 0; i < 3; ++i) {
      dom = std::max(dom, plan.targets[i] - plan.achieved.e[i]);
    }
    log.check("quad-plan.dominates", dom,
              {plan.achieved.e[0], plan.achieved.e[1], plan.achieved.e[2],
               plan.targets[0], plan.targets[1], plan.targets[2]});

    auto base = plan.base;
    if (corrupted) corrupt(base);
    std::array<double, 3> s{};
    for (std::size_t i = 0; i < 3; ++i) s[i] = fp.single(plan.roles.bobs[i]);
    const double oracle = quad::oracle_max_min(base, s);
    log.check("quad-plan.oracle-ge-g", plan.g - oracle, {oracle, plan.g});
  }
  const auto best = quad::best_bound(pp, fp);
  log.check("quad-plan.g-le-upper", best.lower - up.value,
            {best.lower, up.value});

  // A tripartite pair padded with an idle qubit reproduces the tripartite
  // per-hub lower bounds.
  const SubsystemLayout three = layout_for({layout.dim(0), layout.dim(1),
                                            layout.dim(2)});
  const auto a3 = random_pure_state(three, rng);
  const auto b3 = random_pure_state(three, rng);
  const auto lo = tri::lower_bound(entropy_profile(AnyState(a3)),
                                   entropy_profile(AnyState(b3)));
  const auto a4 = entropy_profile(AnyState(append_idle_qubit(a3)));
  const auto b4 = entropy_profile(AnyState(append_idle_qubit(b3)));
  for (std::size_t hub = 0; hub < 3; ++hub) {
    const double g = quad::compute_g(a4, b4, hub).value;
    log.check("quad-plan.tripartite-reduction", std::abs(g - lo.per_hub[hub]),
              {g, lo.per_hub[hub]});
  }
}

void suite_ghz_split(Log& log, const SubsystemLayout& layout, Rng& rng) {
  const auto sigma = AnyState(random_pure_state(layout, rng));
  const auto prof = entropy_profile(sigma);
  const auto fixed = ghz::ghz_rate_lower(sigma);
  double sum = 0.0;
  for (const auto& s : fixed.split) sum += s.ebits;
  log.check("ghz-split.saturation", std::abs(sum - 1.0), {sum});

  double upper = kInfinity;
  for (std::uint32_t b = 1; b < layout.all().bits(); ++b) {
    if (auto r = entropy_ratio(1.0, prof.at(PartySet(b)))) {
      upper = std::min(upper, *r);
    }
  }
  log.check("ghz-split.below-upper", fixed.rate_lower - upper,
            {fixed.rate_lower, upper});

  for (double extra : {0.5, 1.0}) {
    const auto over = ghz::ghz_rate_lower(sigma, fixed.alice, fixed.pivot,
                                          fixed.e_c + extra);
    // Strict decrease: equality counts as a violation.
    const double gap = over.rate_lower - fixed.rate_lower;
    log.check("ghz-split.monotone", gap >= 0.0 ? std::max(gap, 1.0) : gap,
              {fixed.rate_lower, over.rate_lower, extra}, 0.0);
  }

  const auto best = ghz::best_ghz_bound(sigma);
  log.check("ghz-split.role-max", fixed.rate_lower - best.rate_lower,
            {fixed.rate_lower, best.rate_lower});
}

struct SuiteInfo {
  std::size_t min_parties;
  std::size_t max_parties;
  double tolerance;
};

const std::map<std::string, SuiteInfo>& suite_info() {
  static const std::map<std::string, SuiteInfo> m{
      {"ssa", {3, 6, kEntropyTol}},
      {"subadditivity", {2, 6, kEntropyTol}},
      {"bound-order", {3, 3, kRateTol}},
      {"combing-region", {3, 3, kRateTol}},
      {"triple-order", {4, 4, kRateTol}},
      {"quad-plan", {4, 4, kRateTol}},
      {"ghz-split", {3, 5, kRateTol}},
  };
  return m;
}

}  // namespace

const std::vector<std::string>& suites() {
  static const std::vector<std::string> s{
      "ssa",          "subadditivity", "bound-order", "combing-region",
      "triple-order", "quad-plan",     "ghz-split"};
  return s;
}

const std::vector<CoverageEntry>& coverage_matrix() {
  static const std::vector<CoverageEntry> m{
      {"ssa.strong-subadditivity", "ssa", "state_core",
       "S(XY) + S(YZ) >= S(Y) + S(XYZ) on purification-sampled mixed states"},
      {"ssa.range", "ssa", "state_core", "0 <= S(T) <= log2 dim(T)"},
      {"subadditivity.subadditive", "subadditivity", "state_core",
       "S(XY) <= S(X) + S(Y)"},
      {"subadditivity.araki-lieb", "subadditivity", "state_core",
       "|S(X) - S(Y)| <= S(XY)"},
      {"subadditivity.complement", "subadditivity", "state_core",
       "pure states: S(T) = S(complement of T)"},
      {"subadditivity.local-unitary", "subadditivity", "state_core",
       "entropies invariant under a local unitary"},
      {"combing-region.vertices", "combing-region", "combing",
       "every merging branch lies in the combing region"},
      {"combing-region.plan-dominates", "combing-region", "combing",
       "random feasible targets are realized with slack >= 0"},
      {"combing-region.relabel", "combing-region", "combing",
       "swapping the two Bobs mirrors every branch"},
      {"bound-order.lower-le-upper", "bound-order", "tripartite_bounds",
       "lower bound <= upper bound"},
      {"bound-order.protocol-feasible", "bound-order", "tripartite_bounds",
       "protocol combing targets lie in the combing region"},
      {"bound-order.permutation", "bound-order", "tripartite_bounds",
       "bounds invariant under a common party permutation"},
      {"bound-order.coincidence", "bound-order", "tripartite_bounds",
       "min attained on a non-hub ratio implies tight bounds"},
      {"triple-order.sum", "triple-order", "quad_planner",
       "every merging triple sums to S(Alice)"},
      {"triple-order.ordering", "triple-order", "quad_planner",
       "pivot entries non-increasing along both order chains"},
      {"quad-plan.dominates", "quad-plan", "quad_planner",
       "achieved triple dominates the G-scaled targets"},
      {"quad-plan.oracle-ge-g", "quad-plan", "quad_planner",
       "LP optimum over the triple polytope >= G"},
      {"quad-plan.g-le-upper", "quad-plan", "quad_planner",
       "best lower bound <= upper bound"},
      {"quad-plan.tripartite-reduction", "quad-plan", "quad_planner",
       "idle fourth party reproduces the tripartite per-hub bounds"},
      {"ghz-split.saturation", "ghz-split", "ghz_distill",
       "split entries sum to 1"},
      {"ghz-split.below-upper", "ghz-split", "ghz_distill",
       "rate <= min_T 1 / S(sigma^T)"},
      {"ghz-split.monotone", "ghz-split", "ghz_distill",
       "a larger entanglement cost strictly lowers the rate"},
      {"ghz-split.role-max", "ghz-split", "ghz_distill",
       "role maximization never lowers the bound"},
  };
  return m;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  const auto t = static_cast<std::uint64_t>(trial);
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(t),
                    static_cast<std::uint32_t>(t >> 32)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

std::vector<int> default_dims(const std::string& suite) {
  if (suite == "triple-order" || suite == "quad-plan" || suite == "ssa") {
    return {2, 2, 2, 2};
  }
  return {2, 2, 2};
}

std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> dims;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    std::size_t used = 0;
    int d = 0;
    try {
      d = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size() || d < 2) {
      throw ArgumentError("bad dims '" + text + "' (expected e.g. 2x2x3)");
    }
    dims.push_back(d);
  }
  if (dims.empty()) throw ArgumentError("empty dims");
  return dims;
}

BatteryReport run_battery(const std::string& suite, std::size_t trials,
                          std::vector<int> dims, std::uint64_t seed,
                          const Options& options) {
  const auto it = suite_info().find(suite);
  if (it == suite_info().end()) {
    throw ArgumentError("unknown suite '" + suite + "'");
  }
  if (dims.empty()) dims = default_dims(suite);
  const auto& info = it->second;
  if (dims.size() < info.min_parties || dims.size() > info.max_parties) {
    throw ArgumentError("suite '" + suite + "' needs " +
                        std::to_string(info.min_parties) + "-" +
                        std::to_string(info.max_parties) + " parties, got " +
                        std::to_string(dims.size()));
  }
  const auto layout = layout_for(dims);
  const double tol = options.tolerance > 0.0 ? options.tolerance : info.tolerance;

  std::vector<Log> logs;
  logs.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    logs.emplace_back(t, trial_seed(seed, t), tol);
  }
  auto run_one = [&](std::size_t t) {
    Log& log = logs[t];
    Rng rng(trial_seed(seed, t));
    try {
      if (suite == "ssa") {
        suite_ssa(log, layout, rng);
      } else if (suite == "subadditivity") {
        suite_subadditivity(log, layout, rng);
      } else if (suite == "bound-order") {
        suite_bound_order(log, layout, rng);
      } else if (suite == "combing-region") {
        suite_combing_region(log, layout, rng);
      } else if (suite == "triple-order") {
        suite_triple_order(log, layout, rng, options.corrupt_triples);
      } else if (suite == "quad-plan") {
        suite_quad_plan(log, layout, rng, options.corrupt_triples);
      } else {
        suite_ghz_split(log, layout, rng);
      }
    } catch (const Error&) {
      log.check(suite + ".exception", kInfinity, {});
    }
  };

  const unsigned workers =
      std::max(1u, std::min<unsigned>(options.threads,
                                      static_cast<unsigned>(std::max<std::size_t>(trials, 1))));
  if (workers == 1) {
    for (std::size_t t = 0; t < trials; ++t) run_one(t);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < trials; t += workers) run_one(t);
      });
    }
    for (auto& th : pool) th.join();
  }

  BatteryReport out;
  out.suite = suite;
  out.trials = trials;
  out.dims = dims;
  out.seed = seed;
  out.tolerance = tol;
  std::map<std::string, CheckStat> merged;
  for (auto& log : logs) {
    for (const auto& [id, s] : log.stats_) {
      auto& m = merged[id];
      m.id = id;
      m.evaluated += s.evaluated;
      m.failed += s.failed;
      m.max_violation = std::max(m.max_violation, s.max_violation);
    }
    for (auto& f : log.failures_) out.failures.push_back(std::move(f));
  }
  for (const auto& c : coverage_matrix()) {
    if (c.suite != suite) continue;
    auto s = merged[c.check];
    s.id = c.check;
    out.checks.push_back(s);
    merged.erase(c.check);
  }
  for (const auto& [id, s] : merged) out.checks.push_back(s);
  for (const auto& s : out.checks) {
    if (std::isfinite(s.max_violation)) {
      out.max_violation = std::max(out.max_violation, s.max_violation);
    } else {
      out.max_violation = kInfinity;
    }
  }
  return out;
}

}  // namespace mprates::verify
