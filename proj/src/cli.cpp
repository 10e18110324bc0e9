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

#include "mprates/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mprates/builders.hpp"
#include "mprates/combing.hpp"
#include "mprates/entropy.hpp"
#include "mprates/errors.hpp"
#include "mprates/ghz_distill.hpp"
#include "mprates/quad.hpp"
#include "mprates/ratio.hpp"
#include "mprates/state_file.hpp"
#include "mprates/tripartite.hpp"

namespace mprates::cli {

namespace {

std::string full(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Left-aligned columns separated by two spaces.
class Table {
 public:
  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      if (width.size() < r.size()) width.resize(r.size(), 0);
      for (std::size_t i = 0; i < r.size(); ++i) {
        width[i] = std::max(width[i], r[i].size());
      }
    }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

class Csv {
 public:
  void add(const std::string& quantity, const std::string& value,
           const std::string& witness = "") {
    body_ += quantity + "," + value + "," + witness + "\n";
  }
  void add(const std::string& quantity, double value,
           const std::string& witness = "") {
    add(quantity, full(value), witness);
  }

  void write(const std::string& path) const {
    if (path.empty()) return;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ArgumentError("cannot write '" + path + "'");
    f << "quantity,value,witness\n" << body_;
  }

 private:
  std::string body_;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string label(const SubsystemLayout& l, std::size_t party) {
  return l.parties()[party];
}

std::string describe_state(const AnyState& s) {
  const auto& l = layout_of(s);
  std::vector<std::string> dims;
  for (int d : l.dims()) dims.push_back(std::to_string(d));
  return std::to_string(l.num_parties()) + " parties (" +
         join(l.parties(), " ") + "), dims " + join(dims, "x") + ", " +
         (is_pure(s) ? "pure" : "mixed");
}

void require_same_parties(const AnyState& a, const AnyState& b) {
  if (layout_of(a).parties() != layout_of(b).parties()) {
    throw ArgumentError("source and target declare different parties");
  }
}

std::optional<std::size_t> party_option(const SubsystemLayout& l,
                                        const std::string& name) {
  if (name.empty()) return std::nullopt;
  return l.index_of(name);
}

EntropyProfile pure_profile(const AnyState& s) {
  if (!is_pure(s)) {
    throw ArgumentError("this command needs a pure state");
  }
  return entropy_profile(s);
}

// Sides are given as labels joined by '+', e.g. "A+B=0.5,0.25".
tri::BipartitionValues parse_einf(const SubsystemLayout& l,
                                  const std::string& text) {
  const auto eq = text.find('=');
  const auto comma = text.find(',', eq == std::string::npos ? 0 : eq);
  if (eq == std::string::npos || comma == std::string::npos) {
    throw ArgumentError("--einf expects SIDE=source,target, got '" + text + "'");
  }
  std::vector<std::string> labels;
  std::stringstream ss(text.substr(0, eq));
  for (std::string p; std::getline(ss, p, '+');) labels.push_back(p);
  const auto side = l.subset(labels);
  l.require_proper(side);
  auto num = [&](const std::string& w) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(w, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != w.size() || w.empty()) {
      throw ArgumentError("--einf value '" + w + "' is not a number");
    }
    return v;
  };
  return {side, num(text.substr(eq + 1, comma - eq - 1)),
          num(text.substr(comma + 1))};
}

// ---------------------------------------------------------------- entropies

int cmd_entropies(const std::string& path, const std::string& csv_path,
                  std::ostream& out) {
  const auto state = io::parse_state_file(path);
  const auto prof = entropy_profile(state);
  const auto& l = layout_of(state);
  out << "state: " << describe_state(state) << "\n\n";
  Table t;
  Csv csv;
  t.row({"subset", "entropy"});
  const auto all = l.all();
  std::vector<PartySet> subsets;
  for (std::uint32_t b = 1; b <= all.bits(); ++b) subsets.emplace_back(b);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](PartySet a, PartySet b) { return a.size() < b.size(); });
  for (const auto s : subsets) {
    if (s == all && is_pure(state)) continue;
    const auto name = "S(" + l.name_of(s) + ")";
    t.row({name, fixed9(prof.at(s))});
    csv.add(name, prof.at(s));
  }
  t.print(out);
  csv.write(csv_path);
  return kOk;
}

// --------------------------------------------------------------------- rate

std::string lower_witnesses(const SubsystemLayout& l,
                            const std::vector<tri::LowerWitness>& ws) {
  std::vector<std::string> parts;
  for (const auto& w : ws) {
    parts.push_back(label(l, w.hub) + ":" + tri::describe(w.term));
  }
  return join(parts, ";");
}

std::string term_text(const SubsystemLayout& l, std::size_t hub,
                      tri::Term term) {
  const std::size_t y = hub == 0 ? 1 : 0;
  const std::size_t z = hub == 2 ? 1 : 2;
  switch (term) {
    case tri::Term::kHub:
      return "S(src " + label(l, hub) + ") / (S(tgt " + label(l, y) +
             ") + S(tgt " + label(l, z) + "))";
    case tri::Term::kFirst:
      return "S(src " + label(l, y) + ") / S(tgt " + label(l, y) + ")";
    case tri::Term::kSecond:
      return "S(src " + label(l, z) + ") / S(tgt " + label(l, z) + ")";
  }
  return "";
}

void rate_tripartite(const AnyState& src, const AnyState& tgt, Csv& csv,
                     std::ostream& out) {
  const auto& l = layout_of(src);
  const auto sp = pure_profile(src);
  const auto tp = pure_profile(tgt);
  const auto b = tri::best_bounds(sp, tp);
  const auto lo = tri::lower_bound(sp, tp);

  Table ratios;
  ratios.row({"party", "S(source)", "S(target)", "ratio"});
  for (std::size_t x = 0; x < 3; ++x) {
    const auto r = b.ratios[x];
    ratios.row({label(l, x), fixed9(sp.single(x)), fixed9(tp.single(x)),
                r ? fixed9(*r) : "excluded"});
    csv.add("ratio_" + label(l, x), r ? full(*r) : "excluded");
  }
  ratios.print(out);
  out << '\n';

  Table hubs;
  hubs.row({"hub", "bound", "attained by"});
  for (std::size_t hub = 0; hub < 3; ++hub) {
    std::vector<std::string> terms;
    for (std::size_t k = 0; k < 3; ++k) {
      const auto term = static_cast<tri::Term>(k);
      // Recompute which entries attain the per-hub minimum.
      const std::size_t y = hub == 0 ? 1 : 0;
      const std::size_t z = hub == 2 ? 1 : 2;
      std::optional<double> v;
      if (term == tri::Term::kHub) {
        v = entropy_ratio(sp.single(hub), tp.single(y) + tp.single(z));
      } else {
        const auto p = term == tri::Term::kFirst ? y : z;
        v = entropy_ratio(sp.single(p), tp.single(p));
      }
      if (v && std::abs(*v - lo.per_hub[hub]) <=
                   1e-12 * std::max(1.0, std::abs(lo.per_hub[hub]))) {
        terms.push_back(term_text(l, hub, term));
      }
    }
    hubs.row({label(l, hub), fixed9(lo.per_hub[hub]), join(terms, ", ")});
    csv.add("lower_hub_" + label(l, hub), lo.per_hub[hub]);
  }
  hubs.print(out);
  out << '\n';

  std::vector<std::string> up_w;
  for (auto x : b.upper_witnesses) up_w.push_back(label(l, x));
  Table summary;
  summary.row({"lower", fixed9(b.lower),
               "hub:term " + lower_witnesses(l, b.lower_witnesses)});
  summary.row({"upper", fixed9(b.upper), "parties " + join(up_w, ",")});
  summary.row({"tight", yes_no(b.tight)});
  if (b.exact_rate) summary.row({"rate", fixed9(*b.exact_rate)});
  summary.print(out);
  csv.add("lower", b.lower, lower_witnesses(l, b.lower_witnesses));
  csv.add("upper", b.upper, join(up_w, ";"));
  csv.add("tight", yes_no(b.tight));
  if (b.common_product_party) {
    out << "note: both states are product across party "
        << label(l, *b.common_product_party)
        << "; the exact bipartite rate applies\n";
  }
  if (is_ghz_pair_to_bell_triangle(src, tgt)) {
    out << "note: for GHZ x GHZ -> three Bell pairs this upper bound is known "
           "not to be achievable\n";
  }
}

void rate_quad(const AnyState& src, const AnyState& tgt, Csv& csv,
               std::ostream& out) {
  const auto& l = layout_of(src);
  const auto b = quad::best_bound(pure_profile(src), pure_profile(tgt));
  Table t;
  t.row({"alice", "G"});
  for (std::size_t a = 0; a < 4; ++a) {
    t.row({label(l, a), fixed9(b.per_alice[a])});
    csv.add("g_alice_" + label(l, a), b.per_alice[a]);
  }
  t.print(out);
  out << '\n';
  std::vector<std::string> up_w;
  for (auto s : b.upper.witnesses) up_w.push_back(l.name_of(s));
  Table s;
  s.row({"lower", fixed9(b.lower), "alice " + label(l, b.alice) +
                                       " (catalytic, budget " +
                                       fixed9(b.plan.catalyst_budget) + ")"});
  s.row({"upper", fixed9(b.upper.value), "subsets " + join(up_w, ",")});
  s.row({"exact", yes_no(b.exact)});
  s.print(out);
  csv.add("lower", b.lower, label(l, b.alice));
  csv.add("upper", b.upper.value, join(up_w, ";"));
  csv.add("exact", yes_no(b.exact));
}

void rate_general_upper(const AnyState& src, const AnyState& tgt,
                        const std::vector<std::string>& einf, Csv& csv,
                        std::ostream& out) {
  const auto& l = layout_of(src);
  std::vector<tri::BipartitionValues> values;
  if (!einf.empty()) {
    for (const auto& e : einf) values.push_back(parse_einf(l, e));
  } else if (is_pure(src) && is_pure(tgt)) {
    values = tri::pure_bipartition_values(entropy_profile(src),
                                          entropy_profile(tgt));
  } else {
    throw NeedsInputError(
        "mixed states need per-bipartition entanglement values; pass "
        "--einf SIDE=source,target for each bipartition",
        "all");
  }
  const auto ub = tri::upper_bound_mixed(values);
  Table t;
  t.row({"bipartition", "source", "target"});
  for (const auto& v : values) {
    t.row({l.name_of(v.side) + "|" + l.name_of(v.side.complement(l.num_parties())),
           fixed9(v.source), fixed9(v.target)});
  }
  t.print(out);
  out << '\n';
  std::vector<std::string> w;
  for (auto s : ub.witnesses) w.push_back(l.name_of(s));
  Table s;
  s.row({"upper", fixed9(ub.value), "bipartitions " + join(w, ",")});
  s.print(out);
  csv.add("upper", ub.value, join(w, ";"));
  if (is_pure(src) && is_pure(tgt) && l.num_parties() >= 5) {
    out << "lower bound: not implemented for five or more parties (the "
           "catalytic construction is only conjectured there)\n";
  }
}

int cmd_rate(const std::string& from, const std::string& to,
             const std::vector<std::string>& einf, const std::string& csv_path,
             std::ostream& out) {
  const auto src = io::parse_state_file(from);
  const auto tgt = io::parse_state_file(to);
  require_same_parties(src, tgt);
  out << "source: " << describe_state(src) << '\n';
  out << "target: " << describe_state(tgt) << "\n\n";
  Csv csv;
  const auto n = layout_of(src).num_parties();
  const bool pure = is_pure(src) && is_pure(tgt);
  if (!pure || !einf.empty()) {
    rate_general_upper(src, tgt, einf, csv, out);
  } else if (n == 2) {
    const double r = tri::bipartite_rate(entropy_profile(src),
                                         entropy_profile(tgt));
    Table t;
    t.row({"rate", fixed9(r), "exact (bipartite)"});
    t.print(out);
    csv.add("rate", r, "exact");
  } else if (n == 3) {
    rate_tripartite(src, tgt, csv, out);
  } else if (n == 4) {
    rate_quad(src, tgt, csv, out);
  } else {
    rate_general_upper(src, tgt, {}, csv, out);
  }
  csv.write(csv_path);
  return kOk;
}

// --------------------------------------------------------------------- comb

int cmd_comb(const std::string& path, const std::string& target_text,
             const std::string& hub_name, const std::string& csv_path,
             std::ostream& out) {
  const auto state = io::parse_state_file(path);
  const auto& l = layout_of(state);
  auto prof = pure_profile(state);
  combing::require_tripartite(prof);
  const std::size_t hub = hub_name.empty() ? 0 : l.index_of(hub_name);
  prof = combing::relabel(prof, hub);
  const std::size_t y = hub == 0 ? 1 : 0;
  const std::size_t z = hub == 2 ? 1 : 2;

  const auto comma = target_text.find(',');
  if (comma == std::string::npos) {
    throw ArgumentError("--target expects e_mu,e_nu");
  }
  combing::Target target;
  try {
    target = {std::stod(target_text.substr(0, comma)),
              std::stod(target_text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ArgumentError("--target expects two numbers, got '" + target_text + "'");
  }
  const auto plan = combing::plan(prof, target);
  const auto A = label(l, hub), B = label(l, y), C = label(l, z);
  out << "state: " << describe_state(state) << '\n';
  out << "hub " << A << ", mu with " << B << ", nu with " << C << "\n\n";
  auto who = [&](const combing::Branch& br) {
    const auto actor = br.actor == combing::Role::kBob ? B : C;
    return br.primitive == combing::Primitive::kMerge
               ? actor + " merges into " + A
               : actor + " assists distillation";
  };
  Table t;
  t.row({"", "e(" + A + "-" + B + ")", "e(" + A + "-" + C + ")", "weight",
         "protocol"});
  t.row({"branch a", fixed9(plan.branch_a.e_mu), fixed9(plan.branch_a.e_nu),
         fixed9(plan.p), who(plan.branch_a)});
  t.row({"branch b", fixed9(plan.branch_b.e_mu), fixed9(plan.branch_b.e_nu),
         fixed9(1.0 - plan.p), who(plan.branch_b)});
  t.row({"target", fixed9(plan.target.e_mu), fixed9(plan.target.e_nu)});
  t.row({"achieved", fixed9(plan.achieved.e_mu), fixed9(plan.achieved.e_nu)});
  t.row({"slack", fixed9(plan.slack.e_mu), fixed9(plan.slack.e_nu)});
  t.print(out);
  out << "ordering: case " << plan.ordering.case_id
      << (plan.ordering.swapped ? " (mirrored)" : "") << '\n';
  Csv csv;
  csv.add("p", plan.p, describe(plan.branch_a));
  csv.add("achieved_mu", plan.achieved.e_mu);
  csv.add("achieved_nu", plan.achieved.e_nu);
  csv.add("slack_mu", plan.slack.e_mu);
  csv.add("slack_nu", plan.slack.e_nu);
  csv.write(csv_path);
  return kOk;
}

// -------------------------------------------------------------------- plan3

int cmd_plan3(const std::string& from, const std::string& to,
              std::ostream& out) {
  const auto src = io::parse_state_file(from);
  const auto tgt = io::parse_state_file(to);
  require_same_parties(src, tgt);
  const auto& l = layout_of(src);
  const auto p = tri::plan_protocol(pure_profile(src), pure_profile(tgt));
  const auto X = label(l, p.hub), Y = label(l, p.mu_partner),
             Z = label(l, p.nu_partner);
  out << "rate " << fixed9(p.r) << " with hub " << X << "\n\n";
  auto who = [&](const combing::Branch& br) {
    const auto actor = br.actor == combing::Role::kBob ? Y : Z;
    return br.primitive == combing::Primitive::kMerge
               ? actor + " merges into " + X
               : actor + " assists " + X + "-" +
                     (br.actor == combing::Role::kBob ? Z : Y);
  };
  Table t;
  t.row({"1", "comb", "e(" + X + "-" + Y + ") = " + fixed9(p.targets.e_mu) +
                          ", e(" + X + "-" + Z + ") = " + fixed9(p.targets.e_nu)});
  t.row({"", "", "weight " + fixed9(p.combing.p) + ": " + who(p.combing.branch_a)});
  t.row({"", "", "weight " + fixed9(1.0 - p.combing.p) + ": " +
                     who(p.combing.branch_b)});
  t.row({"2", "convert", X + "-" + Z + " pairs into target across " + Z +
                             "|" + X + Y + " at rate " + fixed9(p.convert_rate)});
  if (p.teleport_step) {
    t.row({"3", "compress", X + " compresses " + Y + "'s share to " +
                                fixed9(p.compress_rate) + " qubits per copy"});
    t.row({"4", "teleport", "uses " + fixed9(p.teleport_budget) + " " + X +
                                "-" + Y + " ebits per copy"});
  } else {
    t.row({"3", "skip", Y + " holds a product share; nothing to teleport"});
  }
  t.print(out);
  return kOk;
}

// -------------------------------------------------------------------- plan4

int cmd_plan4(const std::string& from, const std::string& to,
              const std::string& alice_name, const std::string& pivot_name,
              const std::string& csv_path, std::ostream& out) {
  const auto src = io::parse_state_file(from);
  const auto tgt = io::parse_state_file(to);
  require_same_parties(src, tgt);
  const auto& l = layout_of(src);
  const auto sp = pure_profile(src);
  const auto tp = pure_profile(tgt);
  quad::require_four_party(sp, tp);

  const auto alice = party_option(l, alice_name);
  const auto pivot = party_option(l, pivot_name);
  std::array<double, 4> per_alice{};
  std::size_t chosen = 0;
  for (std::size_t a = 0; a < 4; ++a) {
    per_alice[a] = quad::compute_g(sp, tp, a).value;
    if (!alice && per_alice[a] > per_alice[chosen]) chosen = a;
  }
  if (alice) chosen = *alice;
  if (pivot && *pivot == chosen) {
    throw ArgumentError("pivot must differ from alice");
  }
  const auto plan = quad::plan(sp, tp, quad::make_roles(chosen, pivot));
  const auto up = quad::upper_bound(sp, tp);
  std::array<double, 3> s{};
  for (std::size_t i = 0; i < 3; ++i) s[i] = tp.single(plan.roles.bobs[i]);
  const double oracle = quad::oracle_max_min(plan.base, s);

  const auto& r = plan.roles;
  const std::array<std::string, 3> bob{label(l, r.bobs[0]), label(l, r.bobs[1]),
                                       label(l, r.bobs[2])};
  out << "alice " << label(l, chosen)
      << (alice ? " (fixed)" : " (maximizes G)") << ", bobs " << bob[0] << ", "
      << bob[1] << ", pivot " << bob[2] << "\n\n";

  Table ga;
  ga.row({"alice", "G"});
  for (std::size_t a = 0; a < 4; ++a) ga.row({label(l, a), fixed9(per_alice[a])});
  ga.print(out);
  out << '\n';

  Table t;
  t.row({"order", "merges", "e(" + bob[0] + ")", "e(" + bob[1] + ")",
         "e(" + bob[2] + ")", "weight"});
  const auto& orders = quad::merge_orders();
  for (std::size_t j = 0; j < 6; ++j) {
    std::string m;
    for (int k : orders[j]) m += (m.empty() ? "" : ",") + bob[static_cast<std::size_t>(k)];
    t.row({std::to_string(j + 1), m, fixed9(plan.base[j].e[0]),
           fixed9(plan.base[j].e[1]), fixed9(plan.base[j].e[2]),
           fixed9(plan.weights[j])});
  }
  t.row({"achieved", "", fixed9(plan.achieved.e[0]), fixed9(plan.achieved.e[1]),
         fixed9(plan.achieved.e[2])});
  t.row({"target", "", fixed9(plan.targets[0]), fixed9(plan.targets[1]),
         fixed9(plan.targets[2])});
  t.row({"catalyst", "", fixed9(plan.catalyst_per_pair[0]),
         fixed9(plan.catalyst_per_pair[1]), fixed9(plan.catalyst_per_pair[2])});
  t.print(out);
  out << '\n';

  Table s2;
  s2.row({"case", std::to_string(plan.case_id),
          plan.pivot_mix ? "second-Bob mix applied" : ""});
  s2.row({"G", fixed9(plan.g)});
  s2.row({"optimum", fixed9(oracle), "best time-sharing of the six orders"});
  s2.row({"upper", fixed9(up.value)});
  s2.row({"catalyst", fixed9(plan.catalyst_budget), "ebits, summed per order"});
  s2.print(out);
  out << "then: " << label(l, chosen)
      << " prepares the target locally and teleports compressed shares ("
      << fixed9(plan.compress_rates[0]) << ", " << fixed9(plan.compress_rates[1])
      << ", " << fixed9(plan.compress_rates[2]) << " qubits per copy)\n";

  Csv csv;
  csv.add("g", plan.g, label(l, chosen));
  csv.add("case", std::to_string(plan.case_id));
  for (std::size_t j = 0; j < 6; ++j) {
    csv.add("weight_" + std::to_string(j + 1), plan.weights[j]);
  }
  csv.add("oracle", oracle);
  csv.add("upper", up.value);
  csv.add("catalyst_budget", plan.catalyst_budget);
  csv.write(csv_path);
  return kOk;
}

// ---------------------------------------------------------------------- ghz

int cmd_ghz(const std::string& path, const std::string& alice_name,
            const std::string& pivot_name, std::optional<double> ec,
            const std::string& csv_path, std::ostream& out) {
  const auto state = io::parse_state_file(path);
  const auto& l = layout_of(state);
  const auto alice = party_option(l, alice_name);
  const auto pivot = party_option(l, pivot_name);
  const auto b = ghz::best_ghz_bound(state, alice, pivot, ec);
  out << "state: " << describe_state(state) << '\n';
  out << "alice " << label(l, b.alice) << ", pivot " << label(l, b.pivot);
  if (!alice || !pivot) out << " (roles maximized over all assignments)";
  out << "\n\n";
  Table t;
  t.row({"e_c", fixed9(b.e_c), ghz::describe(b.surrogate)});
  t.row({"rate", fixed9(b.rate_lower), "GHZ copies -> target, lower bound"});
  t.print(out);
  out << '\n';
  Table s;
  s.row({"bob", "ebits per GHZ copy"});
  std::vector<double> split;
  for (const auto& e : b.split) {
    s.row({label(l, e.bob), fixed9(e.ebits)});
    split.push_back(e.ebits);
  }
  s.print(out);
  out << "combing feasible: " << yes_no(ghz::ghz_combing_feasible(split)) << '\n';
  if (b.unbounded) out << "note: " << b.note << '\n';
  Csv csv;
  csv.add("e_c", b.e_c, ghz::describe(b.surrogate));
  csv.add("rate", b.rate_lower,
          label(l, b.alice) + ";" + label(l, b.pivot));
  for (const auto& e : b.split) csv.add("split_" + label(l, e.bob), e.ebits);
  csv.write(csv_path);
  return kOk;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const std::string& suite, std::size_t trials,
               const std::string& dims_text, std::uint64_t seed,
               unsigned threads, bool corrupt, const std::string& report_path,
               std::ostream& out) {
  verify::Options opt;
  opt.threads = threads;
  opt.corrupt_triples = corrupt;
  const auto dims =
      dims_text.empty() ? std::vector<int>{} : verify::parse_dims(dims_text);
  const auto r = verify::run_battery(suite, trials, dims, seed, opt);
  std::vector<std::string> ds;
  for (int d : r.dims) ds.push_back(std::to_string(d));
  out << "suite " << r.suite << ", " << r.trials << " trials, dims "
      << join(ds, "x") << ", seed " << r.seed << "\n\n";
  Table t;
  t.row({"check", "evaluated", "failed", "max violation"});
  for (const auto& c : r.checks) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", c.max_violation);
    t.row({c.id, std::to_string(c.evaluated), std::to_string(c.failed), buf});
  }
  t.print(out);
  out << "failures: " << r.failures.size() << '\n';
  for (std::size_t i = 0; i < std::min<std::size_t>(r.failures.size(), 10); ++i) {
    const auto& f = r.failures[i];
    out << "  trial " << f.trial << " seed " << f.seed << " " << f.check
        << " violation " << full(f.violation) << '\n';
  }
  if (!report_path.empty()) {
    std::ofstream f(report_path);
    if (!f) throw ArgumentError("cannot write '" + report_path + "'");
    f << report_json(r) << '\n';
  }
  return r.failures.empty() ? kOk : kDomainError;
}

}  // namespace

std::string fixed9(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9f", v == 0.0 ? 0.0 : v);
  return buf;
}

bool is_ghz_pair_to_bell_triangle(const AnyState& source,
                                  const AnyState& target) {
  if (!is_pure(source) || !is_pure(target)) return false;
  const auto& l = layout_of(source);
  if (l.dims() != std::vector<int>{4, 4, 4} || layout_of(target) != l) {
    return false;
  }
  const auto& p = l.parties();
  const auto ghz = ghz_state({"x", "y", "z"});
  const auto ghz_pair = distribute(p, {{ghz, p}, {ghz, p}});
  const auto triangle = distribute(
      p, {{bell_pair("x", "y"), {p[0], p[1]}},
          {bell_pair("x", "y"), {p[0], p[2]}},
          {bell_pair("x", "y"), {p[1], p[2]}}});
  auto overlap = [](const PureState& a, const PureState& b) {
    return std::abs(a.amplitudes().dot(b.amplitudes()));
  };
  return overlap(std::get<PureState>(source), ghz_pair) > 1.0 - 1e-9 &&
         overlap(std::get<PureState>(target), triangle) > 1.0 - 1e-9;
}

std::string report_json(const verify::BatteryReport& r) {
  using nlohmann::json;
  auto num = [](double v) -> json {
    if (std::isfinite(v)) return v;
    return v > 0 ? "inf" : "-inf";
  };
  json j;
  j["suite"] = r.suite;
  j["trials"] = r.trials;
  j["dims"] = r.dims;
  j["seed"] = r.seed;
  j["tolerance"] = r.tolerance;
  j["max_violation"] = num(r.max_violation);
  j["failures"] = json::array();
  for (const auto& f : r.failures) {
    json o;
    o["trial"] = f.trial;
    o["seed"] = f.seed;
    o["check"] = f.check;
    json obs = json::array();
    for (double v : f.observed) obs.push_back(num(v));
    o["observed"] = obs;
    o["violation"] = num(f.violation);
    j["failures"].push_back(o);
  }
  j["checks"] = json::array();
  for (const auto& c : r.checks) {
    j["checks"].push_back({{"id", c.id},
                           {"evaluated", c.evaluated},
                           {"failed", c.failed},
                           {"max_violation", num(c.max_violation)}});
  }
  j["coverage"] = json::array();
  for (const auto& c : verify::coverage_matrix()) {
    j["coverage"].push_back({{"check", c.check},
                             {"suite", c.suite},
                             {"module", c.module},
                             {"invariant", c.invariant}});
  }
  return j.dump(2);
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Entanglement conversion rate bounds for multipartite pure states",
               "mprates"};
  app.require_subcommand(1);

  std::string state, from, to, csv, target, hub, alice, pivot, suite, dims,
      report;
  std::vector<std::string> einf;
  double ec = 0.0;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool corrupt = false;

  auto* c_ent = app.add_subcommand("entropies", "Entropy of every subset");
  c_ent->add_option("--state", state, "State file")->required();
  c_ent->add_option("--csv", csv, "Write quantity,value,witness rows");

  auto* c_rate = app.add_subcommand("rate", "Bounds on the conversion rate");
  c_rate->add_option("--from", from, "Source state file")->required();
  c_rate->add_option("--to", to, "Target state file")->required();
  c_rate->add_option("--einf", einf,
                     "Per-bipartition values SIDE=source,target (SIDE joins "
                     "labels with '+'); repeatable");
  c_rate->add_option("--csv", csv, "Write quantity,value,witness rows");

  auto* c_comb = app.add_subcommand("comb", "Time-sharing plan for combing");
  c_comb->add_option("--state", state, "Tripartite pure state file")->required();
  c_comb->add_option("--target", target, "e_mu,e_nu in ebits per copy")
      ->required();
  c_comb->add_option("--hub", hub, "Party that collects (default: first)");
  c_comb->add_option("--csv", csv, "Write quantity,value,witness rows");

  auto* c_p3 = app.add_subcommand("plan3", "Tripartite protocol steps");
  c_p3->add_option("--from", from, "Source state file")->required();
  c_p3->add_option("--to", to, "Target state file")->required();

  auto* c_p4 = app.add_subcommand("plan4", "Four-party catalytic plan");
  c_p4->add_option("--from", from, "Source state file")->required();
  c_p4->add_option("--to", to, "Target state file")->required();
  c_p4->add_option("--alice", alice, "Fix Alice (default: best G)");
  c_p4->add_option("--pivot", pivot, "Bob used as pivot (default: last Bob)");
  c_p4->add_option("--csv", csv, "Write quantity,value,witness rows");

  auto* c_ghz = app.add_subcommand("ghz", "GHZ -> target rate lower bound");
  c_ghz->add_option("--state", state, "Target state file")->required();
  c_ghz->add_option("--alice", alice, "Fix Alice (default: maximize)");
  auto* o_pivot = c_ghz->add_option("--pivot", pivot, "Fix the pivot Bob");
  auto* o_ec = c_ghz->add_option("--ec", ec, "Entanglement cost across pivot|rest")
                   ->check(CLI::NonNegativeNumber);
  o_ec->needs(o_pivot);
  c_ghz->add_option("--csv", csv, "Write quantity,value,witness rows");

  auto* c_ver = app.add_subcommand("verify", "Randomized property battery");
  c_ver->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(verify::suites()));
  c_ver->add_option("--trials", trials, "Number of trials");
  c_ver->add_option("--dims", dims, "Local dims, e.g. 2x2x2");
  c_ver->add_option("--seed", seed, "Base seed");
  c_ver->add_option("--threads", threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  c_ver->add_option("--report", report, "Write the JSON report here");
  c_ver->add_flag("--corrupt", corrupt,
                  "Negative control: perturb triples before checking");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*c_ent) return cmd_entropies(state, csv, out);
    if (*c_rate) return cmd_rate(from, to, einf, csv, out);
    if (*c_comb) return cmd_comb(state, target, hub, csv, out);
    if (*c_p3) return cmd_plan3(from, to, out);
    if (*c_p4) return cmd_plan4(from, to, alice, pivot, csv, out);
    if (*c_ghz) {
      return cmd_ghz(state, alice, pivot,
                     o_ec->count() ? std::optional<double>(ec) : std::nullopt,
                     csv, out);
    }
    return cmd_verify(suite, trials, dims, seed, threads, corrupt, report, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const NeedsInputError& e) {
    err << "needs input (" << e.bipartition() << "): " << e.what() << '\n';
    return kDomainError;
  } catch (const combing::InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kDomainError;
  } catch (const NotImplementedError& e) {
    err << "not implemented: " << e.what() << '\n';
    return kDomainError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace mprates::cli
