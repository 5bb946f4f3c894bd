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

#include "choicetree/normal_form.h"
#include "choicetree/tree.h"
#include "expect_error.h"
#include "fixtures.h"
#include "random_trees.h"

namespace choicetree {
namespace {

TEST(NodeIdTest, PathArithmetic) {
  const NodeId n{0, 1, 2};
  EXPECT_EQ(n.depth(), 3u);
  EXPECT_EQ(n.parent(), (NodeId{0, 1}));
  EXPECT_EQ(NodeId::root().child(4), NodeId{4});
  EXPECT_TRUE((NodeId{0, 1}).is_prefix_of(n));
  EXPECT_FALSE((NodeId{1}).is_prefix_of(n));
  EXPECT_EQ(n.relative_to(NodeId{0}), (NodeId{1, 2}));
  EXPECT_EQ((NodeId{1, 2}).under(NodeId{0}), n);
  EXPECT_EQ(n.to_string(), "0.1.2");
  EXPECT_ERROR_KIND(NodeId::root().parent(), kUnknownNode);
}

TEST(TreeTest, LakeTreeIsConsistent) {
  const TreeDocument lake = fixtures::load("lake.tree");
  EXPECT_TRUE(validate(lake.tree));
  EXPECT_TRUE(lake.tree.root_event().is_full());
}

TEST(TreeTest, SingleLeafIsConsistent) {
  const TreeDocument doc = fixtures::load("leaf.tree");
  EXPECT_TRUE(validate(doc.tree));
  EXPECT_EQ(doc.tree.node_count(), 1u);
}

TEST(TreeTest, DuplicatedChanceEventsAreRejected) {
  PossibilitySpace s({"a", "b"});
  const Event e = s.singleton(0);
  EXPECT_ERROR_KIND(chance({{e, leaf(RewardId{0})}, {e, leaf(RewardId{0})}}),
                    kNotAPartition);
}

TEST(TreeTest, SubtreeAtRootIsTheTree) {
  const TreeDocument dom = fixtures::load("dominance.tree");
  EXPECT_EQ(subtree_at(dom.tree, NodeId::root()), dom.tree);
}

TEST(TreeTest, LakeSubtreeAfterFirstForecast) {
  const TreeDocument lake = fixtures::load("lake.tree");
  const DecisionTree sub = subtree_at(lake.tree, NodeId{0, 0});
  EXPECT_TRUE(sub.root().is_decision());
  EXPECT_EQ(sub.root().num_children(), 2u);
  EXPECT_EQ(sub.root_event(), fixtures::event(lake, "S1"));
  EXPECT_EQ(lake.tree.event_at(NodeId{0, 0}), fixtures::event(lake, "S1"));
}

TEST(TreeTest, DominanceSubtreeAtN) {
  const TreeDocument dom = fixtures::load("dominance.tree");
  const DecisionTree sub = subtree_at(dom.tree, NodeId{0});
  const GambleSet expected{fixtures::gamble(dom, {"x", "x"}),
                           fixtures::gamble(dom, {"ya", "yb"})};
  EXPECT_EQ(gamb(sub), expected);
  EXPECT_ERROR_KIND(subtree_at(dom.tree, NodeId{5}), kUnknownNode);
}

TEST(TreeTest, InconsistentTreeIsFlaggedAndPruned) {
  PossibilitySpace s({"a", "b"});
  const Event a = s.singleton(0);
  const Event b = s.singleton(1);
  // Conditioned on {a}, the branch on {b} can never be reached.
  DecisionTree t(chance({{a, leaf(RewardId{0})}, {b, leaf(RewardId{1})}}), a);
  ValidationResult v = validate(t);
  EXPECT_FALSE(v);
  EXPECT_EQ(*v.offending, NodeId{1});
  EXPECT_ERROR_KIND(require_consistent(t), kEmptySubtreeEvent);
  const DecisionTree pruned = prune_inconsistent(t);
  EXPECT_TRUE(validate(pruned));
  EXPECT_EQ(pruned.root().num_children(), 1u);
}

TEST(TreeTest, StructuralEqualityIgnoresChanceBranchOrder) {
  PossibilitySpace s({"a", "b"});
  const Event a = s.singleton(0);
  const Event b = s.singleton(1);
  DecisionTree t1(chance({{a, leaf(RewardId{0})}, {b, leaf(RewardId{1})}}), s.all());
  DecisionTree t2(chance({{b, leaf(RewardId{1})}, {a, leaf(RewardId{0})}}), s.all());
  EXPECT_EQ(t1, t2);
}

// Property: every node of a sampled tree has ev = root event ∩ chance events
// on its path, and the sampler only produces consistent trees.
TEST(TreeTest, EventAtMatchesPathIntersection) {
  testgen::TreeSampler sampler(5);
  for (int i = 0; i < 100; ++i) {
    const testgen::Sample smp = sampler.sample();
    ASSERT_TRUE(validate(smp.tree));
    smp.tree.visit([&](const NodeId& id, const Node&, const Event& ev) {
      Event expect = smp.tree.root_event();
      const Node* cur = &smp.tree.root();
      for (std::uint32_t k : id.path()) {
        if (cur->is_chance()) expect = expect & cur->events()[k];
        cur = &cur->child(k);
      }
      EXPECT_EQ(ev, expect);
      EXPECT_EQ(smp.tree.event_at(id), expect);
    });
  }
}

}  // namespace
}  // namespace choicetree
