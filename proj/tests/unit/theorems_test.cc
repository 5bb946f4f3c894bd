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

#include "choicetree/theorems.h"

namespace choicetree {
namespace {

CorpusConfig small_corpus() {
  CorpusConfig c = default_corpus();
  c.instance_budget = 150;
  c.tree_count = 25;
  c.seed = 3;
  return c;
}

TEST(TheoremTest, EuMaxIsSubtreePerfect) {
  const TheoremCheck t = check_subtree_perfectness_theorem(rule_factory(RuleKind::kEuMax),
                                                           small_corpus());
  EXPECT_TRUE(t.premises_corroborated);
  EXPECT_TRUE(t.tree_failures.empty());
  EXPECT_EQ(t.trees_checked, 25u);
  EXPECT_TRUE(t.consistent());
}

TEST(TheoremTest, BackwardInductionForEuMaxAndDominance) {
  for (RuleKind k : {RuleKind::kEuMax, RuleKind::kPointwiseDominance}) {
    const TheoremCheck t = check_backward_induction_theorem(rule_factory(k), small_corpus());
    EXPECT_TRUE(t.consistent()) << to_string(k);
    EXPECT_TRUE(t.tree_failures.empty()) << to_string(k);
  }
}

TEST(TheoremTest, WeakPerfectnessIsConsistent) {
  for (RuleKind k : {RuleKind::kEuMax, RuleKind::kMaximality}) {
    const TheoremCheck t = check_weak_perfectness_theorem(rule_factory(k), small_corpus());
    EXPECT_TRUE(t.consistent()) << to_string(k);
  }
}

TEST(TheoremTest, DominanceFailsAPremiseOfSubtreePerfectness) {
  const TheoremCheck t = check_subtree_perfectness_theorem(
      rule_factory(RuleKind::kPointwiseDominance), small_corpus());
  EXPECT_FALSE(t.premises_corroborated);
  EXPECT_TRUE(t.consistent());
}

TEST(AgreementTest, IntersectionEquivalents) {
  for (RuleKind k : {RuleKind::kEuMax, RuleKind::kPointwiseDominance, RuleKind::kMaximality}) {
    const AgreementCheck a = check_intersection_equivalents(rule_factory(k), GenConfig{}, 500, 1);
    EXPECT_TRUE(a.agree) << to_string(k);
    EXPECT_EQ(a.reports.size(), 4u);
  }
}

TEST(AgreementTest, PathIndependence) {
  for (RuleKind k : {RuleKind::kEuMax, RuleKind::kPointwiseDominance, RuleKind::kMaximality}) {
    const AgreementCheck a = check_path_independence_agreement(rule_factory(k), GenConfig{}, 300, 2);
    EXPECT_TRUE(a.agree) << to_string(k);
  }
}

}  // namespace
}  // namespace choicetree
