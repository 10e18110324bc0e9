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

#include "mprates/combing.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mprates::combing {

namespace {

struct Singles {
  double a, b, c;
};

Singles singles(const EntropyProfile& profile) {
  require_tripartite(profile);
  return {profile.single(0), profile.single(1), profile.single(2)};
}

Branch mirrored(Branch b) {
  std::swap(b.e_mu, b.e_nu);
  b.actor = b.actor == Role::kBob ? Role::kCharlie : Role::kBob;
  return b;
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(9);
  os << std::fixed << v;
  return os.str();
}

}  // namespace

std::string describe(Constraint c) {
  switch (c) {
    case Constraint::kTotal:
      return "E(mu) + E(nu) <= S(A)";
    case Constraint::kBobCap:
      return "E(mu) <= S(B)";
    case Constraint::kCharlieCap:
      return "E(nu) <= S(C)";
  }
  return "?";
}

std::string describe(const Branch& b) {
  const std::string actor = b.actor == Role::kBob ? "Bob" : "Charlie";
  const std::string other = b.actor == Role::kBob ? "Charlie" : "Bob";
  std::string what = b.primitive == Primitive::kMerge
                         ? actor + " merges into Alice"
                         : actor + " assists Alice-" + other + " distillation";
  return what + " -> (" + num(b.e_mu) + ", " + num(b.e_nu) + ")";
}

void require_tripartite(const EntropyProfile& profile) {
  if (profile.num_parties() != 3) {
    throw ArgumentError("combing needs a tripartite profile, got " +
                        std::to_string(profile.num_parties()) + " parties");
  }
}

std::optional<Constraint> first_violation(const EntropyProfile& profile,
                                          const Target& target) {
  const auto s = singles(profile);
  if (target.e_mu < 0.0 || target.e_nu < 0.0) {
    throw ArgumentError("combing target entries must be nonnegative");
  }
  if (target.e_mu + target.e_nu > s.a + tol::kRate) return Constraint::kTotal;
  if (target.e_mu > s.b + tol::kRate) return Constraint::kBobCap;
  if (target.e_nu > s.c + tol::kRate) return Constraint::kCharlieCap;
  return std::nullopt;
}

bool feasible(const EntropyProfile& profile, const Target& target) {
  return !first_violation(profile, target).has_value();
}

Ordering classify(double a, double b, double c) {
  // Lowest case number wins ties; within a case the unswapped orientation wins.
  if (a >= b && b >= c) return {1, false};
  if (a >= c && c >= b) return {1, true};
  if (b >= c && c >= a) return {2, false};
  if (c >= b && b >= a) return {2, true};
  if (b >= a && a >= c) return {3, false};
  return {3, true};  // c >= a >= b
}

std::vector<Branch> merging_branches(const EntropyProfile& profile) {
  const auto s = singles(profile);
  const auto ord = classify(s.a, s.b, s.c);
  // Work in the orientation where the case's ordering holds literally.
  const double b = ord.swapped ? s.c : s.b;
  const double c = ord.swapped ? s.b : s.c;
  const double a = s.a;
  std::vector<Branch> out;
  switch (ord.case_id) {
    case 1:
      out = {{Primitive::kMerge, Role::kBob, a - c, c},
             {Primitive::kMerge, Role::kCharlie, b, a - b}};
      break;
    case 2:
      out = {{Primitive::kAssistedDistill, Role::kCharlie, a, 0.0},
             {Primitive::kAssistedDistill, Role::kBob, 0.0, a}};
      break;
    default:
      out = {{Primitive::kMerge, Role::kBob, a - c, c},
             {Primitive::kAssistedDistill, Role::kCharlie, a, 0.0}};
      break;
  }
  for (auto& br : out) {
    if (br.e_mu < 0.0 || br.e_nu < 0.0) {
      throw InternalError("negative merging gain in combing case " +
                          std::to_string(ord.case_id));
    }
    if (ord.swapped) br = mirrored(br);
  }
  return out;
}

Plan plan(const EntropyProfile& profile, const Target& target) {
  const auto s = singles(profile);
  if (auto v = first_violation(profile, target)) {
    throw InfeasibleError("combing target (" + num(target.e_mu) + ", " +
                              num(target.e_nu) + ") violates " + describe(*v),
                          *v);
  }
  const auto branches = merging_branches(profile);
  const Branch& ba = branches[0];
  const Branch& bb = branches[1];

  // Both branches lie on the face e_mu + e_nu = S(A). Pick e_mu on the
  // segment so that both components dominate the target, as close as possible
  // to the target's diagonal projection onto the face.
  const double seg_lo = std::min(ba.e_mu, bb.e_mu);
  const double seg_hi = std::max(ba.e_mu, bb.e_mu);
  const double lo = std::max(target.e_mu, seg_lo);
  const double hi = std::min(s.a - target.e_nu, seg_hi);
  if (lo > hi + tol::kRate) {
    throw InternalError("combing branches do not cover a feasible target");
  }
  const double projected =
      target.e_mu + 0.5 * (s.a - target.e_mu - target.e_nu);
  const double mu = std::clamp(projected, lo, std::max(lo, hi));

  double p = 1.0;
  if (ba.e_mu != bb.e_mu) p = (mu - bb.e_mu) / (ba.e_mu - bb.e_mu);
  p = std::clamp(p, 0.0, 1.0);

  Plan out{classify(s.a, s.b, s.c), ba, bb, p, target, {}, {}};
  out.achieved.e_mu = p * ba.e_mu + (1.0 - p) * bb.e_mu;
  out.achieved.e_nu = p * ba.e_nu + (1.0 - p) * bb.e_nu;
  out.slack.e_mu = out.achieved.e_mu - target.e_mu;
  out.slack.e_nu = out.achieved.e_nu - target.e_nu;
  if (out.slack.e_mu < -tol::kRate || out.slack.e_nu < -tol::kRate ||
      !feasible(profile, {std::max(0.0, out.achieved.e_mu),
                          std::max(0.0, out.achieved.e_nu)})) {
    throw InternalError("combing plan does not realize its target");
  }
  return out;
}

EntropyProfile relabel(const EntropyProfile& profile, std::size_t hub,
                       bool swap_others) {
  require_tripartite(profile);
  if (hub > 2) throw ArgumentError("hub index out of range");
  std::vector<std::size_t> order{hub};
  for (std::size_t p = 0; p < 3; ++p) {
    if (p != hub) order.push_back(p);
  }
  if (swap_others) std::swap(order[1], order[2]);
  return permute_profile(profile, order);
}

}  // namespace mprates::combing
