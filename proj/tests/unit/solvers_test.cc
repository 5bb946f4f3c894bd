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

#include <set>

#include "choicetree/solvers.h"
#include "expect_error.h"
#include "fixtures.h"
#include "oracle.h"
#include "random_trees.h"

namespace choicetree {
namespace {

const Strategy kX({NodeId{0}, NodeId{0, 0}});
const Strategy kY({NodeId{0}, NodeId{0, 1}});
const Strategy kZ({NodeId{1}});

class DominanceSolve : public ::testing::Test {
 protected:
  TreeDocument doc = fixtures::load("dominance.tree");
  RulePtr rule = make_rule(RuleKind::kPointwiseDominance, ChoiceContext(doc.rewards));
};

TEST_F(DominanceSolve, NormalFormKeepsYAndZ) {
  const SolveReport r = norm_opt(doc.tree, *rule);
  EXPECT_EQ(r.solution, (NormalFormSolution{{kY, kZ}}));
  EXPECT_EQ(r.induced_gambles, (GambleSet{fixtures::gamble(doc, {"ya", "yb"}),
                                          fixtures::gamble(doc, {"z", "z"})}));
  EXPECT_EQ(r.stats.nfd_count, 3u);
  EXPECT_EQ(r.method, SolveMethod::kNormal);
}

TEST_F(DominanceSolve, BackwardInductionAgrees) {
  const SolveReport sub = norm_opt(subtree_at(doc.tree, NodeId{0}), *rule);
  // The subtree stage keeps both X and Y.
  EXPECT_EQ(sub.induced_gambles, (GambleSet{fixtures::gamble(doc, {"x", "x"}),
                                            fixtures::gamble(doc, {"ya", "yb"})}));
  const SolveReport back = back_opt(doc.tree, *rule);
  EXPECT_EQ(back.solution, norm_opt(doc.tree, *rule).solution);
  EXPECT_EQ(back.method, SolveMethod::kBackward);
  EXPECT_TRUE(compare_backward(doc.tree, *rule).agree());
  EXPECT_EQ(solve(doc.tree, *rule, SolveMethod::kBackward).solution, back.solution);
}

TEST_F(DominanceSolve, ExtractionPrunesOnlyTheArcToX) {
  const ExtensiveSolution ext = extract_extensive(doc.tree, norm_opt(doc.tree, *rule).solution);
  EXPECT_EQ(ext.pruned_arcs(), std::vector<NodeId>{NodeId({0, 0})});
  EXPECT_TRUE(ext.is_kept(NodeId{0, 1}));
  EXPECT_TRUE(ext.is_kept(NodeId{1}));
  EXPECT_TRUE(check_normal_extensive_equivalence(doc.tree, *rule));
}

TEST(SolversTest, SingleLeaf) {
  const TreeDocument doc = fixtures::load("leaf.tree");
  const RulePtr rule = make_rule(RuleKind::kPointwiseDominance, ChoiceContext(doc.rewards));
  const SolveReport n = norm_opt(doc.tree, *rule);
  EXPECT_EQ(n.solution.size(), 1u);
  EXPECT_EQ(back_opt(doc.tree, *rule).solution, n.solution);
  EXPECT_TRUE(check_normal_extensive_equivalence(doc.tree, *rule));
}

TEST(SolversTest, LakeEuMaxUniform) {
  const TreeDocument lake = fixtures::load("lake.tree");
  const ChoiceContext ctx = fixtures::context(lake, "lake_uniform.ctx");
  const RulePtr rule = make_rule(RuleKind::kEuMax, ctx);
  const SolveReport n = norm_opt(lake.tree, *rule);
  const NormalFormSolution expected{{Strategy({NodeId{1}, NodeId{1, 0}}),
                                     Strategy({NodeId{1}, NodeId{1, 1}})}};
  EXPECT_EQ(n.solution, expected);
  const oracle::Enumerated e = oracle::enumerate(lake.tree);
  const std::set<Strategy> brute = oracle::norm_opt(e, [&](const std::vector<Gamble>& s) {
    return oracle::eu_max(s, lake.space.all(), *ctx.probability(), lake.rewards);
  });
  EXPECT_EQ(std::set<Strategy>(n.solution.begin(), n.solution.end()), brute);
  EXPECT_EQ(back_opt(lake.tree, *rule).solution, n.solution);
}

TEST(SolversTest, CrossExampleNeedsAllFourArcs) {
  const TreeDocument cross = fixtures::load("cross.tree");
  const NormalFormSolution two{{Strategy({NodeId{0, 0}, NodeId{1, 1}}),
                                Strategy({NodeId{0, 1}, NodeId{1, 0}})}};
  const ExtensiveSolution ext = extract_extensive(cross.tree, two);
  EXPECT_EQ(ext.kept_arcs().size(), 4u);
  EXPECT_TRUE(ext.pruned_arcs().empty());
  EXPECT_EQ(nfd(ext).size(), 4u);
  const ExtensiveEquivalence v = check_solution_extensive_equivalence(cross.tree, two);
  EXPECT_FALSE(v);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(*v.witness, Strategy({NodeId{0, 0}, NodeId{1, 0}}));
}

TEST(SolversTest, FullSolutionPrunesNothing) {
  const TreeDocument lake = fixtures::load("lake.tree");
  const ExtensiveSolution ext = extract_extensive(lake.tree, nfd(lake.tree));
  EXPECT_TRUE(ext.pruned_arcs().empty());
  EXPECT_TRUE(check_solution_extensive_equivalence(lake.tree, nfd(lake.tree)));
  EXPECT_ERROR_KIND(extract_extensive(lake.tree, NormalFormSolution{}), kEmptySolution);
}

TEST(SolversTest, InconsistentTreesAreRejected) {
  PossibilitySpace s({"a", "b"});
  RewardTable t;
  t.add("r", 0);
  DecisionTree bad(chance({{s.singleton(0), leaf(RewardId{0})},
                           {s.singleton(1), leaf(RewardId{0})}}),
                   s.singleton(0));
  const RulePtr rule = make_rule(RuleKind::kPointwiseDominance, ChoiceContext(t));
  EXPECT_ERROR_KIND(norm_opt(bad, *rule), kEmptySubtreeEvent);
  EXPECT_ERROR_KIND(back_opt(bad, *rule), kEmptySubtreeEvent);
  EXPECT_NO_THROW(norm_opt(prune_inconsistent(bad), *rule));
}

// Properties on sampled trees: norm_opt matches the brute-force selection,
// back_opt agrees for eu_max, and the extensive form reproduces the solution.
TEST(SolversTest, SampledTreesMatchOracle) {
  testgen::TreeSampler sampler(31);
  for (int i = 0; i < 120; ++i) {
    const testgen::Sample smp = sampler.sample(4, 3);
    const oracle::Enumerated e = oracle::enumerate(smp.tree);
    if (!e.complete) continue;
    const Event ev = smp.tree.root_event();
    const ChoiceContext ctx(smp.rewards, smp.probability);
    const RulePtr eu = make_rule(RuleKind::kEuMax, ctx);
    const RulePtr dom = make_rule(RuleKind::kPointwiseDominance, ctx);
    const SolveReport n = norm_opt(smp.tree, *eu);
    const std::set<Strategy> brute = oracle::norm_opt(e, [&](const std::vector<Gamble>& s) {
      return oracle::eu_max(s, ev, smp.probability, smp.rewards);
    });
    ASSERT_EQ(std::set<Strategy>(n.solution.begin(), n.solution.end()), brute) << i;
    EXPECT_EQ(gamb(smp.tree, n.solution), n.induced_gambles);
    EXPECT_TRUE(compare_backward(smp.tree, *eu).agree());
    EXPECT_TRUE(check_normal_extensive_equivalence(smp.tree, *eu));
    const SolveReport d = norm_opt(smp.tree, *dom);
    const std::set<Strategy> brute_dom = oracle::norm_opt(e, [&](const std::vector<Gamble>& s) {
      return oracle::pointwise(s, ev, smp.rewards);
    });
    EXPECT_EQ(std::set<Strategy>(d.solution.begin(), d.solution.end()), brute_dom);
  }
}

}  // namespace
}  // namespace choicetree
