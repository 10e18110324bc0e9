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


#include <gtest/gtest.h>

#include "mprates/builders.hpp"
#include "mprates/ratio.hpp"
#include "mprates/tripartite.hpp"

namespace mprates::tri {
namespace {

const std::vector<std::string> kABC{"A", "B", "C"};

EntropyProfile ghz3() { return entropy_profile(ghz_state(kABC)); }

// Bell pairs A1-B and A2-C: S = (2, 1, 1).
PureState two_bells() {
  return distribute(kABC, {{bell_pair("x", "y"), {"A", "B"}},
                           {bell_pair("x", "y"), {"A", "C"}}});
}

TEST(Bipartite, Examples) {
  const auto bell = entropy_profile(bell_pair("A", "B"));
  EXPECT_DOUBLE_EQ(bipartite_rate(bell, bell), 1.0);
  EXPECT_NEAR(bipartite_rate(0.9182958340544896, 1.0), 0.9182958340544896, 1e-15);
  EXPECT_DOUBLE_EQ(bipartite_rate(1.0, 0.5), 2.0);
  EXPECT_THROW(bipartite_rate(1.0, 0.0), DomainError);
}

TEST(Upper, GhzPairToBellTriangle) {
  const auto src = distribute(kABC, {{ghz_state({"x", "y", "z"}), kABC},
                                     {ghz_state({"x", "y", "z"}), kABC}});
  const auto tgt = distribute(kABC, {{bell_pair("x", "y"), {"A", "B"}},
                                     {bell_pair("x", "y"), {"A", "C"}},
                                     {bell_pair("x", "y"), {"B", "C"}}});
  const auto u = upper_bound(entropy_profile(src), entropy_profile(tgt));
  EXPECT_NEAR(u.value, 1.0, 1e-12);
  EXPECT_EQ(u.witnesses.size(), 3u);
}

TEST(Upper, GhzToGhzAndRandomToGhz) {
  EXPECT_NEAR(upper_bound(ghz3(), ghz3()).value, 1.0, 1e-12);
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto p = entropy_profile(random_pure_state(SubsystemLayout(kABC, {2, 3, 3}), rng));
    const double m = std::min({p.single(0), p.single(1), p.single(2)});
    EXPECT_NEAR(upper_bound(p, ghz3()).value, m, 1e-10);
  }
}

TEST(Lower, GhzToGhzIsHalfAndNotTight) {
  const auto lo = lower_bound(ghz3(), ghz3());
  EXPECT_NEAR(lo.value, 0.5, 1e-12);
  EXPECT_EQ(lo.witnesses.size(), 3u);  // every hub ties
  for (const auto& w : lo.witnesses) EXPECT_EQ(w.term, Term::kHub);
  const auto b = best_bounds(ghz_state(kABC), ghz_state(kABC));
  EXPECT_NEAR(b.lower, 0.5, 1e-12);
  EXPECT_NEAR(b.upper, 1.0, 1e-12);
  EXPECT_FALSE(b.tight);
  EXPECT_FALSE(b.exact_rate.has_value());
}

TEST(Lower, TightFamily) {
  const auto psi = two_bells();
  const auto p = entropy_profile(psi);
  EXPECT_NEAR(p.single(0), 2.0, 1e-12);
  const auto b = best_bounds(psi, ghz_state(kABC));
  EXPECT_NEAR(b.lower, 1.0, 1e-9);
  EXPECT_NEAR(b.upper, 1.0, 1e-9);
  EXPECT_TRUE(b.tight);
  ASSERT_TRUE(b.exact_rate.has_value());
  EXPECT_NEAR(*b.exact_rate, std::min({2.0, 1.0, 1.0}), 1e-9);
  EXPECT_EQ(b.lower_witnesses.front().hub, 0u);
}

TEST(Lower, ProductTargetPartyExcluded) {
  // phi = Bell(A,C) with B product.
  const auto phi = entropy_profile(distribute(kABC, {{bell_pair("x", "y"), {"A", "C"}}}));
  const auto psi = ghz3();
  const auto up = upper_bound(psi, phi);
  ASSERT_TRUE(up.ratios[1].has_value());
  EXPECT_TRUE(std::isinf(*up.ratios[1]));
  EXPECT_NEAR(up.value, 1.0, 1e-12);
  const auto lo = lower_bound(psi, phi);
  // hub A: min{1/(0+1), inf, 1} = 1
  EXPECT_NEAR(lo.per_hub[0], 1.0, 1e-12);
  EXPECT_NEAR(lo.value, 1.0, 1e-12);
}

TEST(Lower, FullyProductTargetIsDegenerate) {
  const auto prod = entropy_profile(basis_state(SubsystemLayout(kABC, {2, 2, 2}), {0, 0, 0}));
  EXPECT_THROW(lower_bound(ghz3(), prod), DegenerateError);
  EXPECT_THROW(upper_bound(prod, prod), DegenerateError);
}

TEST(Best, CommonProductCutDelegatesToBipartite) {
  Rng rng(5);
  const auto two = random_pure_state(SubsystemLayout({"x", "y"}, {2, 2}), rng);
  const auto psi = distribute(kABC, {{two, {"A", "B"}}});
  const auto phi = distribute(kABC, {{bell_pair("x", "y"), {"A", "B"}}});
  const auto b = best_bounds(psi, phi);
  ASSERT_TRUE(b.common_product_party.has_value());
  EXPECT_EQ(*b.common_product_party, 2u);
  const double s = entropy_profile(two).single(0);
  EXPECT_NEAR(b.lower, s, 1e-10);
  EXPECT_NEAR(b.upper, s, 1e-10);
  EXPECT_TRUE(b.tight);
  const auto rev = reversibility_gap(psi, phi);
  EXPECT_EQ(rev.verdict, Reversibility::kUndetermined);
  EXPECT_FALSE(rev.note.empty());
}

TEST(Protocol, TightAndGhzExamples) {
  const auto t = plan_protocol(entropy_profile(two_bells()), ghz3());
  EXPECT_NEAR(t.r, 1.0, 1e-9);
  EXPECT_NEAR(t.targets.e_mu, 1.0, 1e-9);
  EXPECT_NEAR(t.targets.e_nu, 1.0, 1e-9);
  EXPECT_NEAR(t.compress_rate, 1.0, 1e-9);
  EXPECT_NEAR(t.teleport_budget, t.compress_rate, 1e-9);
  EXPECT_TRUE(t.teleport_step);

  const auto g = plan_protocol(ghz3(), ghz3());
  EXPECT_NEAR(g.r, 0.5, 1e-12);
  EXPECT_NEAR(g.targets.e_mu, 0.5, 1e-12);
  EXPECT_NEAR(g.targets.e_nu, 0.5, 1e-12);
  EXPECT_NEAR(g.compress_rate, 0.5, 1e-12);
}

TEST(Protocol, ProductPartnerSkipsTeleport) {
  // phi = Bell(A,C), B product: hub A converts with C, nothing to teleport.
  const auto phi = entropy_profile(distribute(kABC, {{bell_pair("x", "y"), {"A", "C"}}}));
  const auto p = plan_protocol(ghz3(), phi);
  EXPECT_FALSE(p.teleport_step);
  EXPECT_NEAR(p.compress_rate, 0.0, 1e-12);
  EXPECT_NEAR(p.convert_rate, p.r, 1e-12);
}

TEST(Reversibility, StrictChainProvesIrreversible) {
  const auto psi = EntropyProfile::pure_tripartite(2.0, 1.0, 1.4);
  const auto phi = EntropyProfile::pure_tripartite(1.0, 1.0, 1.0);
  const auto r = reversibility_gap(psi, phi);
  EXPECT_TRUE(r.forward.tight);
  EXPECT_NEAR(r.forward.lower, 1.0, 1e-12);
  EXPECT_NEAR(r.backward.upper, 0.5, 1e-12);
  EXPECT_EQ(r.verdict, Reversibility::kIrreversible);
}

TEST(Reversibility, IdenticalStatesUndetermined) {
  const auto p = entropy_profile(two_bells());
  EXPECT_EQ(reversibility_gap(p, p).verdict, Reversibility::kUndetermined);
}

TEST(Mixed, Examples) {
  const PartySet a = PartySet::single(0), b = PartySet::single(1), c = PartySet::single(2);
  auto m = upper_bound_mixed({{a, 2, 1}, {b, 1.5, 1}, {c, 3, 2}});
  EXPECT_NEAR(m.value, 1.5, 1e-15);
  EXPECT_EQ(m.witnesses.size(), 2u);
  m = upper_bound_mixed({{a, 0, 1}, {b, 1, 1}});
  EXPECT_DOUBLE_EQ(m.value, 0.0);
  EXPECT_THROW(upper_bound_mixed({{a, 0, 0}}), DegenerateError);
  EXPECT_THROW(upper_bound_mixed({{a, -1, 1}}), ArgumentError);
}

TEST(Mixed, PureInputsReproduceTripartiteUpper) {
  Rng rng(41);
  for (int t = 0; t < 20; ++t) {
    SubsystemLayout l(kABC, {2, 2, 3});
    const auto p = entropy_profile(random_pure_state(l, rng));
    const auto q = entropy_profile(random_pure_state(l, rng));
    EXPECT_NEAR(upper_bound_mixed(pure_bipartition_values(p, q)).value,
                upper_bound(p, q).value, 1e-12);
  }
}

TEST(Validation, MismatchedInputs) {
  EXPECT_THROW(best_bounds(ghz_state(kABC), ghz_state({"A", "B", "D"})), ArgumentError);
  EXPECT_THROW(upper_bound(ghz3(), entropy_profile(ghz_state({"A", "B", "C", "D"}))),
               ArgumentError);
}

class RandomPairs : public ::testing::Test {
 protected:
  template <class Fn>
  void each(int n, Fn fn) {
    Rng rng(101);
    std::uniform_int_distribution<int> dim(2, 3);
    for (int t = 0; t < n; ++t) {
      SubsystemLayout l(kABC, {dim(rng), dim(rng), dim(rng)});
      fn(random_pure_state(l, rng), random_pure_state(l, rng), rng);
    }
  }
};

TEST_F(RandomPairs, LowerNeverExceedsUpper) {
  each(500, [](const PureState& a, const PureState& b, Rng&) {
    const auto r = best_bounds(a, b);
    EXPECT_LE(r.lower, r.upper + 1e-9);
    EXPECT_GE(r.lower, 0.0);
  });
}

TEST_F(RandomPairs, ProtocolTargetsAreCombable) {
  each(200, [](const PureState& a, const PureState& b, Rng&) {
    const auto pa = entropy_profile(a), pb = entropy_profile(b);
    const auto p = plan_protocol(pa, pb);
    EXPECT_LE(p.targets.e_mu + p.targets.e_nu, pa.single(p.hub) + 1e-9);
    EXPECT_LE(p.targets.e_mu, pa.single(p.mu_partner) + 1e-9);
    EXPECT_LE(p.targets.e_nu, pa.single(p.nu_partner) + 1e-9);
    EXPECT_NEAR(p.compress_rate, p.teleport_budget, 1e-9);
  });
}

TEST_F(RandomPairs, PermutationCovariance) {
  each(100, [](const PureState& a, const PureState& b, Rng& rng) {
    std::vector<std::size_t> order{0, 1, 2};
    std::shuffle(order.begin(), order.end(), rng);
    const auto r = best_bounds(a, b);
    const auto s = best_bounds(permute_parties(a, order), permute_parties(b, order));
    EXPECT_NEAR(r.lower, s.lower, 1e-12);
    EXPECT_NEAR(r.upper, s.upper, 1e-12);
  });
}

TEST_F(RandomPairs, NonHubMinimumForcesTightness) {
  int hits = 0;
  each(300, [&](const PureState& a, const PureState& b, Rng&) {
    const auto pa = entropy_profile(a), pb = entropy_profile(b);
    const auto r = best_bounds(pa, pb);
    for (std::size_t hub = 0; hub < 3; ++hub) {
      const std::size_t y = hub == 0 ? 1 : 0, z = hub == 2 ? 1 : 2;
      const double h = pa.single(hub) / (pb.single(y) + pb.single(z));
      const double ry = pa.single(y) / pb.single(y), rz = pa.single(z) / pb.single(z);
      if (std::min(ry, rz) <= h) {
        ++hits;
        EXPECT_TRUE(r.tight) << r.lower << " " << r.upper;
      }
    }
  });
  EXPECT_GT(hits, 0);
}

}  // namespace
}  // namespace mprates::tri
