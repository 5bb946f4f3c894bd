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
#include <vector>

#include "choicetree/rational.h"
#include "choicetree/space.h"
#include "expect_error.h"

namespace choicetree {
namespace {

PossibilitySpace four() { return PossibilitySpace({"w1", "w2", "w3", "w4"}); }

TEST(SpaceTest, LabelsAndLookup) {
  PossibilitySpace s = four();
  EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(s.label(2), "w3");
  EXPECT_EQ(s.index_of("w4"), 3u);
  EXPECT_FALSE(s.index_of("nope").has_value());
}

TEST(SpaceTest, RejectsBadLabelSets) {
  EXPECT_ERROR_KIND(PossibilitySpace(std::vector<std::string>{}), kInvalidArgument);
  EXPECT_ERROR_KIND(PossibilitySpace({"a", "a"}), kDuplicateDefinition);
  std::vector<std::string> many;
  for (int i = 0; i < 65; ++i) many.push_back("s" + std::to_string(i));
  EXPECT_ERROR_KIND(PossibilitySpace(many), kInvalidArgument);
}

TEST(SpaceTest, EventAlgebra) {
  PossibilitySpace s = four();
  Event a = s.from_indices({0, 1});
  Event b = s.from_indices({1, 2});
  EXPECT_EQ((a & b), s.singleton(1));
  EXPECT_EQ((a | b), s.from_indices({0, 1, 2}));
  EXPECT_EQ((a - b), s.singleton(0));
  EXPECT_EQ(a.complement(), s.from_indices({2, 3}));
  EXPECT_TRUE(s.all().is_full());
  EXPECT_TRUE(s.none().empty());
  EXPECT_TRUE(s.singleton(0).is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_EQ(a.count(), 2u);
}

TEST(SpaceTest, CrossSpaceMixingIsAnError) {
  PossibilitySpace s = four();
  PossibilitySpace t({"u1", "u2", "u3", "u4"});
  EXPECT_ERROR_KIND(s.all() & t.all(), kSpaceMismatch);
  EXPECT_FALSE(s.all() == t.all());
}

TEST(SpaceTest, Partitions) {
  PossibilitySpace s = four();
  std::vector<Event> good{s.from_indices({0, 2}), s.from_indices({1, 3})};
  EXPECT_TRUE(is_partition(good));
  std::vector<Event> overlap{s.from_indices({0, 1}), s.from_indices({1, 2, 3})};
  EXPECT_FALSE(is_partition(overlap));
  std::vector<Event> gap{s.from_indices({0}), s.from_indices({1, 2})};
  EXPECT_FALSE(is_partition(gap));
  std::vector<Event> with_empty{s.all(), s.none()};
  EXPECT_FALSE(is_partition(with_empty));
  EXPECT_ERROR_KIND(require_partition(overlap, "test"), kNotAPartition);
}

TEST(SpaceTest, RandomEventIdentities) {
  PossibilitySpace s = four();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Event a = s.from_bits(rng() & 15U);
    Event b = s.from_bits(rng() & 15U);
    EXPECT_EQ((a | b).complement(), a.complement() & b.complement());
    EXPECT_EQ(a - b, a & b.complement());
    EXPECT_EQ((a & b).count() + (a | b).count(), a.count() + b.count());
  }
}

TEST(RationalTest, ParsesAndFormatsCanonically) {
  EXPECT_EQ(format_rational(parse_rational("4/8")), "1/2");
  EXPECT_EQ(format_rational(parse_rational("-6/3")), "-2");
  EXPECT_EQ(format_rational(parse_rational("7")), "7");
  EXPECT_ERROR_KIND(parse_rational("1/0"), kInvalidArgument);
  EXPECT_ERROR_KIND(parse_rational("x"), kInvalidArgument);
}

}  // namespace
}  // namespace choicetree
