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


#include <cmath>

#include <gtest/gtest.h>

#include "mprates/builders.hpp"
#include "mprates/errors.hpp"
#include "mprates/quad.hpp"
#include "oracles.hpp"

namespace mprates::quad {
namespace {

const std::vector<std::string> kABCD{"A", "B", "C", "D"};

EntropyProfile ghz4() { return entropy_profile(ghz_state(kABCD)); }

// Bell(A,B) (x) Bell(B,C) (x) Bell(B,D): Alice = A needs catalysts.
EntropyProfile star_at_b() {
  return entropy_profile(distribute(kABCD, {{bell_pair("x", "y"), {"A", "B"}},
                                            {bell_pair("x", "y"), {"B", "C"}},
                                            {bell_pair("x", "y"), {"B", "D"}}}));
}

EntropyProfile star_at_a() {
  return entropy_profile(distribute(kABCD, {{bell_pair("x", "y"), {"A", "B"}},
                                            {bell_pair("x", "y"), {"A", "C"}},
                                            {bell_pair("x", "y"), {"A", "D"}}}));
}

std::array<std::array<double, 3>, 6> raw(const std::array<RateTriple, 6>& t) {
  std::array<std::array<double, 3>, 6> out{};
  for (std::size_t j = 0; j < 6; ++j) out[j] = t[j].e;
  return out;
}

void expect_triple(const RateTriple& t, std::array<double, 3> e) {
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(t.e[i], e[i], 1e-12) << i;
}

TEST(Roles, PivotMovesLast) {
  const auto r = make_roles(1);
  EXPECT_EQ(r.alice, 1u);
  EXPECT_EQ(r.bobs, (std::array<std::size_t, 3>{0, 2, 3}));
  const auto p = make_roles(0, 1);
  EXPECT_EQ(p.bobs, (std::array<std::size_t, 3>{2, 3, 1}));
  EXPECT_THROW(make_roles(0, 0), ArgumentError);
  EXPECT_THROW(make_roles(4), ArgumentError);
}

TEST(Triples, Ghz4) {
  const auto t = base_triples(ghz4(), make_roles(0));
  expect_triple(t[0], {0, 0, 1});
  expect_triple(t[1], {0, 1, 0});
  expect_triple(t[2], {0, 1, 0});
  expect_triple(t[3], {0, 0, 1});
  expect_triple(t[4], {1, 0, 0});
  expect_triple(t[5], {1, 0, 0});
  for (int j = 0; j < 6; ++j) EXPECT_EQ(t[static_cast<std::size_t>(j)].origin, j + 1);
  EXPECT_TRUE(verify_triple_ordering(t));
}

TEST(Triples, MatchMergeSimulation) {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = entropy_profile(
        random_pure_state(SubsystemLayout(kABCD, {2, 2, 2, 3}), rng));
    auto S = [&](std::uint32_t mask) { return p.at(PartySet(mask)); };
    for (std::size_t alice = 0; alice < 4; ++alice) {
      const auto roles = make_roles(alice);
      const auto t = base_triples(p, roles);
      const std::array<int, 3> bobs{static_cast<int>(roles.bobs[0]),
                                    static_cast<int>(roles.bobs[1]),
                                    static_cast<int>(roles.bobs[2])};
      for (std::size_t j = 0; j < 6; ++j) {
        const auto want =
            oracle::merge_triple(S, static_cast<int>(alice), bobs, merge_orders()[j]);
        for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(t[j].e[i], want[i], 1e-12);
        EXPECT_NEAR(t[j].sum(), p.single(alice), 1e-10);
      }
      EXPECT_DOUBLE_EQ(t[0].e[2], t[3].e[2]);
      EXPECT_DOUBLE_EQ(t[2].e[2], t[5].e[2]);
      EXPECT_TRUE(verify_triple_ordering(t));
    }
  }
}

TEST(Triples, CorruptedOrderingIsRejected) {
  Rng rng(4);
  auto t = base_triples(
      entropy_profile(random_pure_state(SubsystemLayout(kABCD, {2, 2, 2, 2}), rng)),
      make_roles(0));
  t[0].e[2] -= 0.25;
  t[2].e[2] += 0.5;
  std::swap(t[0].e, t[2].e);
  EXPECT_FALSE(verify_triple_ordering(t));
}

TEST(G, Ghz4) {
  const auto g = compute_g(ghz4(), ghz4(), 0);
  EXPECT_NEAR(g.value, 1.0 / 3.0, 1e-12);
  EXPECT_EQ(g.witness, PartySet::of({1, 2, 3}));
}

TEST(G, TargetWithoutEntangledBobsIsDegenerate) {
  const auto prod =
      entropy_profile(basis_state(SubsystemLayout(kABCD, {2, 2, 2, 2}), {0, 0, 0, 0}));
  EXPECT_THROW(compute_g(ghz4(), prod, 0), DegenerateError);
}

TEST(Plan, Ghz4) {
  const auto p = plan(ghz4(), ghz4(), make_roles(0));
  EXPECT_EQ(p.case_id, 1);
  EXPECT_NEAR(p.g, 1.0 / 3.0, 1e-12);
  for (double e : p.achieved.e) EXPECT_GE(e, 1.0 / 3.0 - 1e-9);
  EXPECT_NEAR(p.catalyst_budget, 0.0, 1e-15);
  EXPECT_NEAR(oracle_max_min(p.base, {1, 1, 1}), 1.0 / 3.0, 1e-9);
  const auto b = best_bound(ghz4(), ghz4());
  EXPECT_NEAR(b.lower, 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(b.upper.value, 1.0, 1e-12);
  EXPECT_EQ(b.upper.witnesses.size(), 14u);
  EXPECT_FALSE(b.exact);
}

TEST(Plan, CatalystExample) {
  const auto psi = star_at_b();
  const auto p = plan(psi, ghz4(), make_roles(0));
  EXPECT_NEAR(p.g, 1.0 / 3.0, 1e-12);
  EXPECT_EQ(p.case_id, 3);
  EXPECT_TRUE(p.pivot_mix);
  expect_triple(p.base[1], {-1, 1, 1});
  expect_triple(p.base[2], {1, 1, -1});
  expect_triple(p.base[3], {1, -1, 1});
  expect_triple(p.base[4], {3, -1, -1});
  const std::array<double, 6> w{0, 4.0 / 9, 2.0 / 9, 2.0 / 9, 1.0 / 9, 0};
  for (std::size_t j = 0; j < 6; ++j) EXPECT_NEAR(p.weights[j], w[j], 1e-12) << j;
  expect_triple(p.achieved, {1.0 / 3, 1.0 / 3, 1.0 / 3});
  EXPECT_NEAR(p.catalyst_budget, 2.0, 1e-12);
  for (double c : p.catalyst_per_pair) EXPECT_NEAR(c, 1.0, 1e-12);
  EXPECT_NEAR(upper_bound(psi, ghz4()).value, 1.0, 1e-12);
}

TEST(Plan, BellStarIsExact) {
  const auto b = best_bound(star_at_a(), ghz4());
  EXPECT_EQ(b.alice, 0u);
  EXPECT_NEAR(b.lower, 1.0, 1e-12);
  EXPECT_NEAR(b.upper.value, 1.0, 1e-12);
  EXPECT_TRUE(b.exact);
  EXPECT_NEAR(b.plan.catalyst_budget, 0.0, 1e-15);
}

TEST(Validation, PartyCountsAndPurity) {
  const auto ghz5 = entropy_profile(ghz_state({"A", "B", "C", "D", "E"}));
  EXPECT_THROW(require_four_party(ghz5, ghz5), NotImplementedError);
  const auto ghz3 = entropy_profile(ghz_state({"A", "B", "C"}));
  EXPECT_THROW(require_four_party(ghz3, ghz3), ArgumentError);
  EXPECT_THROW(require_four_party(ghz4(), entropy_profile(ghz_state({"A", "B", "C", "E"}))),
               ArgumentError);
  Rng rng(2);
  const auto mixed =
      entropy_profile(random_mixed_state(SubsystemLayout(kABCD, {2, 2, 2, 2}), 2, rng));
  EXPECT_THROW(require_four_party(mixed, ghz4()), ArgumentError);
}

TEST(Oracle, NoActiveTargetIsUnbounded) {
  const auto t = base_triples(ghz4(), make_roles(0));
  EXPECT_TRUE(std::isinf(oracle_max_min(t, {0, 0, 0})));
}

class RandomQuad : public ::testing::Test {
 protected:
  template <class Fn>
  void each(int n, std::uint64_t seed, Fn fn) {
    Rng rng(seed);
    std::uniform_int_distribution<int> dim(2, 3);
    for (int t = 0; t < n; ++t) {
      SubsystemLayout l(kABCD, {2, dim(rng), 2, dim(rng)});
      fn(entropy_profile(random_pure_state(l, rng)),
         entropy_profile(random_pure_state(l, rng)));
    }
  }
};

TEST_F(RandomQuad, PlanDominatesTargets) {
  each(300, 11, [](const EntropyProfile& a, const EntropyProfile& b) {
    for (std::size_t alice = 0; alice < 4; ++alice) {
      const auto p = plan(a, b, make_roles(alice));
      double wsum = 0.0;
      for (double w : p.weights) {
        EXPECT_GE(w, 0.0);
        wsum += w;
      }
      EXPECT_NEAR(wsum, 1.0, 1e-12);
      for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_GE(p.achieved.e[i], p.targets[i] - 1e-9) << "case " << p.case_id;
      }
      EXPECT_GE(p.catalyst_budget, 0.0);
    }
  });
}

TEST_F(RandomQuad, LpOptimumCoversG) {
  each(200, 12, [](const EntropyProfile& a, const EntropyProfile& b) {
    const auto roles = make_roles(0);
    const auto t = base_triples(a, roles);
    const std::array<double, 3> s{b.single(roles.bobs[0]), b.single(roles.bobs[1]),
                                  b.single(roles.bobs[2])};
    const double lp = oracle_max_min(t, s);
    EXPECT_GE(lp, compute_g(a, b, 0).value - 1e-9);
    // Random mixtures never beat the exact optimum.
    EXPECT_LE(oracle::sampled_max_min(raw(t), s, 200, 5), lp + 1e-9);
  });
}

TEST_F(RandomQuad, LowerNeverExceedsUpper) {
  each(300, 13, [](const EntropyProfile& a, const EntropyProfile& b) {
    const auto r = best_bound(a, b);
    EXPECT_LE(r.lower, r.upper.value + 1e-9);
    for (double g : r.per_alice) EXPECT_LE(g, r.lower);
  });
}

}  // namespace
}  // namespace mprates::quad
