// Copyright 2026 The choicetree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "choicetree/choice.h"
#include "choicetree/normal_form.h"
#include "expect_error.h"
#include "fixtures.h"
#include "oracle.h"

namespace choicetree {
namespace {

MassFunction uniform(std::size_t n) {
  return MassFunction(n, Rational(1) / static_cast<long>(n));
}

class DominanceRules : public ::testing::Test {
 protected:
  TreeDocument doc = fixtures::load("dominance.tree");
  Gamble x = fixtures::gamble(doc, {"x", "x"});
  Gamble y = fixtures::gamble(doc, {"ya", "yb"});
  Gamble z = fixtures::gamble(doc, {"z", "z"});
  RulePtr dominance = make_rule(RuleKind::kPointwiseDominance, ChoiceContext(doc.rewards));
};

TEST_F(DominanceRules, DominanceDropsOnlyX) {
  EXPECT_EQ(dominance->select(GambleSet{x, y, z}, doc.space.all()), (GambleSet{y, z}));
}

TEST_F(DominanceRules, XAndYAreIncomparable) {
  EXPECT_EQ(dominance->select(GambleSet{x, y}, doc.space.all()), (GambleSet{x, y}));
}

TEST_F(DominanceRules, SingletonIsKeptByEveryRule) {
  ChoiceContext ctx(doc.rewards, uniform(2),
                    std::vector<MassFunction>{uniform(2), {Rational(1, 3), Rational(2, 3)}});
  for (RuleKind k : all_rule_kinds()) {
    EXPECT_EQ(make_rule(k, ctx)->select(GambleSet{y}, doc.space.all()), GambleSet{y})
        << to_string(k);
  }
}

TEST_F(DominanceRules, SelectValidatesItsInput) {
  EXPECT_ERROR_KIND(dominance->select(GambleSet{}, doc.space.all()), kEmptyInputSet);
  EXPECT_ERROR_KIND(dominance->select(GambleSet{x}, doc.space.none()), kEmptyEvent);
  EXPECT_ERROR_KIND(dominance->select(GambleSet{Gamble::constant(3, RewardId{0})},
                                      doc.space.all()),
                    kDomainMismatch);
  // y attains yb only on a2, outside A = {a1}.
  EXPECT_ERROR_KIND(dominance->select(GambleSet{y}, fixtures::event(doc, "A")),
                    kInconsistentSet);
}

TEST_F(DominanceRules, SelectChecksTheRuleContract) {
  RulePtr empty = make_function_rule("empty", [](const GambleSet&, const Event&) {
    return GambleSet{};
  });
  EXPECT_ERROR_KIND(empty->select(GambleSet{x}, doc.space.all()), kEmptySolution);
  const Gamble other = z;
  RulePtr outside = make_function_rule("outside", [other](const GambleSet&, const Event&) {
    return GambleSet{other};
  });
  EXPECT_ERROR_KIND(outside->select(GambleSet{x}, doc.space.all()), kInvalidArgument);
}

TEST(ChoiceContextTest, MissingContextAndBadMasses) {
  RewardTable t;
  t.add("a", 1);
  ChoiceContext bare(t);
  EXPECT_ERROR_KIND(make_rule(RuleKind::kEuMax, bare), kMissingContext);
  EXPECT_ERROR_KIND(make_rule(RuleKind::kMaximality, bare), kMissingContext);
  EXPECT_NO_THROW(make_rule(RuleKind::kPointwiseDominance, bare));
  EXPECT_ERROR_KIND(ChoiceContext(t, MassFunction{Rational(1), Rational(0)}),
                    kInvalidArgument);
  EXPECT_ERROR_KIND(ChoiceContext(t, MassFunction{Rational(1, 2), Rational(1, 3)}),
                    kInvalidArgument);
  EXPECT_TRUE(needs_probability(RuleKind::kEuMax));
  EXPECT_TRUE(needs_credal(RuleKind::kEAdmissibility));
  for (RuleKind k : all_rule_kinds()) EXPECT_EQ(parse_rule_kind(to_string(k)), k);
  EXPECT_FALSE(parse_rule_kind("nope").has_value());
}

TEST(ExpectationTest, Examples) {
  const TreeDocument lake = fixtures::load("lake.tree");
  const MassFunction p = uniform(4);
  const Gamble g = fixtures::gamble(lake, {"u9", "u9", "u14", "u14"});
  EXPECT_EQ(conditional_expectation(p, g, lake.space.all(), lake.rewards), Rational(23, 2));
  EXPECT_EQ(conditional_expectation(p, g, fixtures::event(lake, "E1"), lake.rewards),
            Rational(9));
  const Gamble c = Gamble::constant(4, *lake.rewards.find("u5"));
  const MassFunction skew{Rational(1, 10), Rational(1, 5), Rational(3, 10), Rational(2, 5)};
  EXPECT_EQ(conditional_expectation(skew, c, fixtures::event(lake, "S2"), lake.rewards),
            Rational(5));
}

TEST(EuMaxTest, LakeUniformPrefersNoForecast) {
  const TreeDocument lake = fixtures::load("lake.tree");
  const ChoiceContext ctx = fixtures::context(lake, "lake_uniform.ctx");
  const GambleSet all = gamb(lake.tree);
  ASSERT_EQ(all.size(), 6u);
  const GambleSet chosen = make_rule(RuleKind::kEuMax, ctx)->select(all, lake.space.all());
  const GambleSet expected{fixtures::gamble(lake, {"u10", "u10", "u15", "u15"}),
                           fixtures::gamble(lake, {"u5", "u5", "u20", "u20"})};
  EXPECT_EQ(chosen, expected);
  for (const Gamble& g : chosen) {
    EXPECT_EQ(oracle::expectation(*ctx.probability(), g, lake.space.all(), lake.rewards),
              Rational(25, 2));
  }
  EXPECT_EQ(oracle::as_set(chosen),
            oracle::eu_max(all.members(), lake.space.all(), *ctx.probability(), lake.rewards));
}

// Random sets over three states and a 2- or 3-element credal list.
struct RandomCase {
  PossibilitySpace space{{"w1", "w2", "w3"}};
  RewardTable rewards;
  std::vector<Gamble> set;
  Event a = space.all();
  MassFunction p;
  std::vector<MassFunction> credal;
};

RandomCase random_case(std::mt19937_64& rng) {
  RandomCase c;
  for (int i = 0; i < 5; ++i) c.rewards.add("r" + std::to_string(i), Rational(static_cast<long>(rng() % 21) - 10));
  auto mass = [&]() {
    MassFunction m;
    Rational total = 0;
    std::vector<long> w;
    for (int s = 0; s < 3; ++s) {
      w.push_back(1 + static_cast<long>(rng() % 9));
      total += w.back();
    }
    for (long x : w) m.push_back(Rational(x) / total);
    return m;
  };
  c.p = mass();
  const int k = 2 + static_cast<int>(rng() % 2);
  for (int i = 0; i < k; ++i) c.credal.push_back(mass());
  c.a = c.space.from_bits(1 + rng() % 7);
  // A-consistent: values outside A copy a value attained inside A.
  const std::vector<std::size_t> inside = c.a.states();
  const int m = 1 + static_cast<int>(rng() % 5);
  for (int i = 0; i < m; ++i) {
    std::vector<RewardId> v(3);
    for (std::size_t s : inside) v[s] = RewardId{static_cast<std::uint32_t>(rng() % 5)};
    for (std::size_t s = 0; s < 3; ++s) {
      if (!c.a.contains(s)) v[s] = v[inside[rng() % inside.size()]];
    }
    c.set.emplace_back(v);
  }
  return c;
}

// Property: each rule agrees with its brute-force definition, and
// E-admissible ⊆ maximal, Γ-maximin ⊆ maximal, maximal ⊆ interval dominance.
TEST(RuleOracleTest, RandomSetsMatchDefinitions) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 400; ++trial) {
    RandomCase c = random_case(rng);
    const ChoiceContext ctx(c.rewards, c.p, c.credal);
    const GambleSet set(c.set);
    auto pick = [&](RuleKind k) {
      return oracle::as_set(make_rule(k, ctx)->select(set, c.a));
    };
    const auto eu = pick(RuleKind::kEuMax);
    const auto dom = pick(RuleKind::kPointwiseDominance);
    const auto maxi = pick(RuleKind::kMaximality);
    const auto eadm = pick(RuleKind::kEAdmissibility);
    const auto gmm = pick(RuleKind::kGammaMaximin);
    const auto ivd = pick(RuleKind::kIntervalDominance);
    EXPECT_EQ(eu, oracle::eu_max(set.members(), c.a, c.p, c.rewards));
    EXPECT_EQ(dom, oracle::pointwise(set.members(), c.a, c.rewards));
    EXPECT_EQ(maxi, oracle::maximality(set.members(), c.a, c.credal, c.rewards));
    EXPECT_EQ(eadm, oracle::e_admissible(set.members(), c.a, c.credal, c.rewards));
    auto subset = [](const std::set<Gamble>& s, const std::set<Gamble>& t) {
      return std::includes(t.begin(), t.end(), s.begin(), s.end());
    };
    EXPECT_TRUE(subset(eadm, maxi));
    EXPECT_TRUE(subset(gmm, maxi));
    EXPECT_TRUE(subset(maxi, ivd));
    EXPECT_TRUE(subset(maxi, dom));
  }
}

}  // namespace
}  // namespace choicetree
