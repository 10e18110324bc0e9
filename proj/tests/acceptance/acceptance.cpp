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


// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "mprates/builders.hpp"
#include "mprates/cli.hpp"
#include "mprates/combing.hpp"
#include "mprates/entropy.hpp"
#include "mprates/ghz_distill.hpp"
#include "mprates/quad.hpp"
#include "mprates/state_file.hpp"
#include "mprates/tripartite.hpp"
#include "mprates/verifier.hpp"

using namespace mprates;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

const std::vector<std::string> kABC{"A", "B", "C"};
const std::vector<std::string> kABCD{"A", "B", "C", "D"};

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome ac1() {
  const auto src = distribute(kABC, {{ghz_state({"x", "y", "z"}), kABC},
                                     {ghz_state({"x", "y", "z"}), kABC}});
  const auto tgt = distribute(kABC, {{bell_pair("x", "y"), {"A", "B"}},
                                     {bell_pair("x", "y"), {"A", "C"}},
                                     {bell_pair("x", "y"), {"B", "C"}}});
  const double u =
      tri::upper_bound(entropy_profile(src), entropy_profile(tgt)).value;
  return {near(u, 1.0, 1e-12), "upper " + cli::fixed9(u)};
}

Outcome ac2() {
  const auto g = ghz_state(kABC);
  const auto b = tri::best_bounds(g, g);
  return {near(b.lower, 0.5, 1e-12) && !b.tight,
          "lower " + cli::fixed9(b.lower) + ", tight " + (b.tight ? "true" : "false")};
}

Outcome ac3() {
  const auto psi = distribute(kABC, {{bell_pair("x", "y"), {"A", "B"}},
                                     {bell_pair("x", "y"), {"A", "C"}}});
  const auto phi = ghz_state(kABC);
  const auto p = entropy_profile(psi), q = entropy_profile(phi);
  const bool shape = near(p.single(0), 2, 1e-12) && near(p.single(1), 1, 1e-12) &&
                     near(p.single(2), 1, 1e-12);
  const auto b = tri::best_bounds(psi, phi);
  double m = INFINITY;
  for (std::size_t x = 0; x < 3; ++x) m = std::min(m, p.single(x) / q.single(x));
  const bool ok = shape && near(b.lower, 1.0, 1e-9) && near(b.upper, 1.0, 1e-9) &&
                  b.exact_rate && near(*b.exact_rate, m, 1e-9);
  return {ok, "lower " + cli::fixed9(b.lower) + ", upper " + cli::fixed9(b.upper)};
}

Outcome ac4() {
  Rng rng(2024);
  std::uniform_int_distribution<int> dim(2, 3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst_vertex = 0.0, worst_slack = 0.0;
  std::size_t plans = 0;
  for (int t = 0; t < 500; ++t) {
    const auto prof = entropy_profile(random_pure_state(
        SubsystemLayout(kABC, {dim(rng), dim(rng), dim(rng)}), rng));
    const double a = prof.single(0), b = prof.single(1), c = prof.single(2);
    for (const auto& br : combing::merging_branches(prof)) {
      worst_vertex = std::max({worst_vertex, br.e_mu + br.e_nu - a, br.e_mu - b,
                               br.e_nu - c, -br.e_mu, -br.e_nu});
    }
    for (int k = 0; k < 20; ++k) {
      const double mu = unit(rng) * std::min(a, b);
      const double nu = unit(rng) * std::min(a - mu, c);
      const auto plan = combing::plan(prof, {mu, nu});
      worst_slack = std::min({worst_slack, plan.slack.e_mu, plan.slack.e_nu});
      ++plans;
    }
  }
  return {worst_vertex <= 1e-9 && worst_slack >= -1e-9,
          std::to_string(plans) + " plans, max vertex excess " + num(worst_vertex) +
              ", min slack " + num(worst_slack)};
}

Outcome ac5() {
  Rng rng(4096);
  const SubsystemLayout l(kABCD, {2, 2, 2, 2});
  double sum_err = 0.0, dom = 0.0, lp_gap = 0.0;
  bool ordering = true;
  for (int t = 0; t < 500; ++t) {
    const auto psi = entropy_profile(random_pure_state(l, rng));
    const auto phi = entropy_profile(random_pure_state(l, rng));
    for (std::size_t alice = 0; alice < 4; ++alice) {
      const auto roles = quad::make_roles(alice);
      const auto tr = quad::base_triples(psi, roles);
      for (const auto& x : tr) sum_err = std::max(sum_err, std::abs(x.sum() - psi.single(alice)));
      ordering = ordering && quad::verify_triple_ordering(tr);
      const auto p = quad::plan(psi, phi, roles);
      for (std::size_t i = 0; i < 3; ++i) dom = std::max(dom, p.targets[i] - p.achieved.e[i]);
      const std::array<double, 3> s{phi.single(roles.bobs[0]), phi.single(roles.bobs[1]),
                                    phi.single(roles.bobs[2])};
      lp_gap = std::max(lp_gap, p.g - quad::oracle_max_min(tr, s));
    }
  }
  return {sum_err <= 1e-9 && ordering && dom <= 1e-9 && lp_gap <= 1e-9,
          "sum err " + num(sum_err) + ", ordering " + (ordering ? "ok" : "broken") +
              ", shortfall " + num(dom) + ", G - LP " + num(lp_gap)};
}

Outcome ac6() {
  const auto g = entropy_profile(ghz_state(kABCD));
  const double gv = quad::compute_g(g, g, 0).value;
  const double u = quad::upper_bound(g, g).value;
  return {near(gv, 1.0 / 3.0, 1e-12) && near(u, 1.0, 1e-12),
          "G " + cli::fixed9(gv) + ", upper " + cli::fixed9(u)};
}

Outcome ac7() {
  const AnyState g = ghz_state(kABC);
  const auto b = ghz::ghz_rate_lower(g);
  double sum = 0.0;
  for (const auto& s : b.split) sum += s.ebits;
  bool monotone = true;
  double prev = INFINITY;
  std::string rates;
  for (double ec : {1.0, 1.5, 2.0}) {
    const double r = ghz::ghz_rate_lower(g, b.alice, b.pivot, ec).rate_lower;
    monotone = monotone && r < prev;
    prev = r;
    rates += (rates.empty() ? "" : "/") + cli::fixed9(r);
  }
  return {near(b.rate_lower, 0.5, 1e-12) && near(sum, 1.0, 1e-12) && monotone,
          "rate " + cli::fixed9(b.rate_lower) + ", split sum " + num(sum) +
              ", overrides " + rates};
}

Outcome ac8() {
  const auto ssa = verify::run_battery("ssa", 1000, {}, 1);
  const auto sub = verify::run_battery("subadditivity", 1000, {}, 1);
  Rng rng(8);
  const SubsystemLayout l(kABCD, {2, 2, 2, 2});
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const AnyState s = random_pure_state(l, rng);
    for (std::uint32_t m = 1; m < 15; ++m) {
      const PartySet x(m);
      const double a = von_neumann_entropy(partial_trace(s, x));
      const double b = von_neumann_entropy(partial_trace(s, x.complement(4)));
      worst = std::max(worst, std::abs(a - b));
    }
  }
  const bool ok = ssa.failures.empty() && ssa.max_violation <= 1e-8 &&
                  sub.failures.empty() && sub.max_violation <= 1e-8 && worst <= 1e-8;
  return {ok, "ssa " + std::to_string(ssa.failures.size()) + " failures, subadditivity " +
                  std::to_string(sub.failures.size()) + " failures, complement " +
                  num(worst)};
}

Outcome ac9() {
  const std::string fx = MPRATES_FIXTURE_DIR;
  const std::string golden = MPRATES_GOLDEN_DIR;
  const auto csv = (std::filesystem::temp_directory_path() / "mprates_acceptance.csv").string();
  std::ostringstream out, err;
  const int code = cli::run({"mprates", "rate", "--from", fx + "/ghz3.st", "--to",
                             fx + "/ghz3.st", "--csv", csv},
                            out, err);
  const bool table = code == 0 && out.str() == slurp(golden + "/ghz3_rate.txt");
  const bool csv_ok = slurp(csv) == slurp(golden + "/ghz3_rate.csv");
  std::filesystem::remove(csv);
  double worst = 0.0;
  int files = 0;
  for (const auto& e : std::filesystem::directory_iterator(fx)) {
    if (e.path().extension() != ".st") continue;
    const auto s = io::parse_state_file(e.path().string());
    std::istringstream in(io::serialize_state(s));
    worst = std::max(worst, trace_distance(s, io::parse_state(in)));
    ++files;
  }
  return {table && csv_ok && worst <= 1e-12 && files > 0,
          std::string("table ") + (table ? "match" : "differs") + ", csv " +
              (csv_ok ? "match" : "differs") + ", round trip " + num(worst) + " over " +
              std::to_string(files) + " files"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    double budget_s;  ///< <= 0: no runtime limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", 1, ac1},  {"AC2", 1, ac2},   {"AC3", 0, ac3},
      {"AC4", 60, ac4}, {"AC5", 120, ac5}, {"AC6", 0, ac6},
      {"AC7", 0, ac7},  {"AC8", 0, ac8},   {"AC9", 0, ac9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs >= c.budget_s) {
      o.ok = false;
      o.detail += ", over time budget";
    }
    failed += o.ok ? 0 : 1;
    std::printf("[%s] %s  %s (%.3f s)\n", o.ok ? "PASS" : "FAIL", c.id, o.detail.c_str(), secs);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
