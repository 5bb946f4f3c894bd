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

#include "choicetree/document.h"
#include "choicetree/generators.h"
#include "choicetree/normal_form.h"
#include "choicetree/theorems.h"
#include "expect_error.h"
#include "fixtures.h"

namespace choicetree {
namespace {

TEST(DocumentTest, DominanceParses) {
  const TreeDocument doc = fixtures::load("dominance.tree");
  EXPECT_EQ(doc.space.labels(), (std::vector<std::string>{"a1", "a2"}));
  EXPECT_EQ(doc.rewards.size(), 4u);
  EXPECT_EQ(doc.rewards.utility(*doc.rewards.find("ya")), Rational(-2));
  EXPECT_EQ(doc.events.size(), 2u);
  EXPECT_EQ(gamb(doc.tree), (GambleSet{fixtures::gamble(doc, {"x", "x"}),
                                       fixtures::gamble(doc, {"ya", "yb"}),
                                       fixtures::gamble(doc, {"z", "z"})}));
}

TEST(DocumentTest, FixturesRoundTripExactly) {
  for (const char* name : {"dominance.tree", "lake.tree", "cross.tree", "leaf.tree"}) {
    const std::string text = fixtures::read(name);
    EXPECT_EQ(serialize_tree_document(parse_tree_document(text)), text) << name;
  }
}

TEST(DocumentTest, GeneratedTreesRoundTrip) {
  const CorpusConfig corpus = default_corpus();
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const GeneratedTree g = random_consistent_tree(corpus.trees, seed);
    const TreeDocument doc = make_tree_document(g.tree, g.context.utilities());
    const std::string text = serialize_tree_document(doc);
    const TreeDocument back = parse_tree_document(text);
    EXPECT_EQ(back.tree, g.tree) << text;
    EXPECT_EQ(serialize_tree_document(back), text);
  }
}

TEST(DocumentTest, RootEventAndComments) {
  const TreeDocument doc = parse_tree_document(
      "# header\n"
      "omega a b   # trailing comment\n"
      "reward r = 3/6\n"
      "event A = a\n"
      "event B = b\n"
      "root_event A\n"
      "tree = decision(\n"
      "  leaf(r),\n"
      "  chance(A: leaf(r), B: leaf(r))\n"
      ")\n");
  EXPECT_EQ(doc.header, std::vector<std::string>{"# header"});
  EXPECT_EQ(doc.tree.root_event(), doc.space.singleton(0));
  EXPECT_EQ(doc.rewards.utility(RewardId{0}), Rational(1, 2));
  EXPECT_EQ(*doc.root_event_name, "A");
}

TEST(DocumentTest, Errors) {
  const std::string head = "omega a b\nreward r = 1\nevent A = a\nevent B = b\n";
  EXPECT_ERROR_KIND(parse_tree_document(head + "tree =\n"), kSyntaxError);
  EXPECT_ERROR_KIND(parse_tree_document(head), kSyntaxError);
  EXPECT_ERROR_KIND(parse_tree_document(head + "tree = leaf(r\n"), kSyntaxError);
  EXPECT_ERROR_KIND(parse_tree_document(head + "tree = leaf(q)\n"), kUnknownReference);
  EXPECT_ERROR_KIND(parse_tree_document(head + "tree = chance(C: leaf(r))\n"),
                    kUnknownReference);
  EXPECT_ERROR_KIND(parse_tree_document(head + "event A = b\ntree = leaf(r)\n"),
                    kDuplicateDefinition);
  EXPECT_ERROR_KIND(parse_tree_document(head + "reward r = 2\ntree = leaf(r)\n"),
                    kDuplicateDefinition);
  EXPECT_ERROR_KIND(parse_tree_document(head + "event C = c\ntree = leaf(r)\n"),
                    kUnknownReference);
  EXPECT_ERROR_KIND(parse_tree_document(head + "tree = chance(A: leaf(r), A: leaf(r))\n"),
                    kNotAPartition);
  EXPECT_ERROR_KIND(parse_tree_document(head + "tree = leaf(r) $\n"), kSyntaxError);
  try {
    parse_tree_document(head + "tree = leaf(r))\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 5, col 15"), std::string::npos) << e.what();
  }
}

TEST(ContextTest, ParsesAndSerialises) {
  const TreeDocument lake = fixtures::load("lake.tree");
  const ChoiceContext ctx = fixtures::context(lake, "lake_uniform.ctx");
  ASSERT_TRUE(ctx.probability().has_value());
  EXPECT_EQ(ctx.probability()->at(2), Rational(1, 4));
  const std::string credal =
      "credal { prob S1E1 = 1/2 prob S2E1 = 1/6 prob S1E2 = 1/6 prob S2E2 = 1/6 }\n"
      "       { prob S1E1 = 1/4 prob S2E1 = 1/4 prob S1E2 = 1/4 prob S2E2 = 1/4 }\n"
      "utility u9 = 100\n";
  const ChoiceContext c2 = parse_context(credal, lake.space, lake.rewards);
  EXPECT_EQ(c2.credal()->size(), 2u);
  EXPECT_EQ(c2.utilities().utility(*lake.rewards.find("u9")), Rational(100));
  const std::string text = serialize_context(c2, lake.space);
  const ChoiceContext c3 = parse_context(text, lake.space, lake.rewards);
  EXPECT_EQ(*c3.credal(), *c2.credal());
  EXPECT_EQ(serialize_context(ctx, lake.space), fixtures::read("lake_uniform.ctx").substr(
                                                    fixtures::read("lake_uniform.ctx").find('\n') + 1));
}

TEST(ContextTest, Errors) {
  const TreeDocument lake = fixtures::load("lake.tree");
  EXPECT_ERROR_KIND(parse_context("prob S1E1 = 1\n", lake.space, lake.rewards), kInvalidArgument);
  EXPECT_ERROR_KIND(parse_context("prob Q = 1\n", lake.space, lake.rewards), kUnknownReference);
  EXPECT_ERROR_KIND(parse_context("utility nope = 1\n", lake.space, lake.rewards),
                    kUnknownReference);
  EXPECT_ERROR_KIND(parse_context("bogus\n", lake.space, lake.rewards), kSyntaxError);
  EXPECT_ERROR_KIND(parse_context("prob S1E1 = 1/2 prob S2E1 = 1/2 prob S1E2 = 0 prob S2E2 = 0\n",
                                  lake.space, lake.rewards),
                    kInvalidArgument);
}

}  // namespace
}  // namespace choicetree
