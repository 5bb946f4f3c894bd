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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "choicetree_cli/cli.h"
#include "fixtures.h"
#include "json.hpp"

namespace choicetree::cli {
namespace {

using Json = nlohmann::json;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fx(const char* name) { return fixtures::path(name); }

TEST(CliTest, CheckPerfectReportsDominanceViolation) {
  const Result r = run({"check-perfect", "--tree", fx("dominance.tree"), "--rule",
                        "pointwise_dominance"});
  ASSERT_EQ(r.code, kExitViolation) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["command"], "check-perfect");
  EXPECT_FALSE(j["perfect"].get<bool>());
  ASSERT_EQ(j["violations"].size(), 1u);
  const Json& v = j["violations"][0];
  EXPECT_EQ(v["node"], Json::array({0}));
  // Strategies at N are addressed relative to the subtree rooted there.
  EXPECT_EQ(v["expected"], Json::parse("[[[0]], [[1]]]"));
  EXPECT_EQ(v["actual"], Json::parse("[[[1]]]"));
}

TEST(CliTest, CompareBackwardAgreesOnDominance) {
  const Result r = run({"compare-backward", "--tree", fx("dominance.tree"), "--rule",
                        "pointwise_dominance"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.json()["agree"].get<bool>());
}

TEST(CliTest, SolveLeaf) {
  const Result r =
      run({"solve", "--tree", fx("leaf.tree"), "--rule", "pointwise_dominance"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["solution"].size(), 1u);
  EXPECT_EQ(j["induced_gambles"], Json::parse("[[\"r\"]]"));
  EXPECT_EQ(j["rule"], "pointwise_dominance");
}

TEST(CliTest, SolveLakeWithContext) {
  const Result r = run({"solve", "--tree", fx("lake.tree"), "--rule", "eu_max",
                        "--context", fx("lake_uniform.ctx"), "--method", "backward",
                        "--full"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["method"], "backward");
  EXPECT_EQ(j["solution"], Json::parse("[[[1], [1, 0]], [[1], [1, 1]]]"));
  EXPECT_EQ(j["nfd"].size(), 6u);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"solve"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "--tree", fx("dominance.tree"), "--rule", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "--tree", "/nonexistent.tree", "--rule", "eu_max"}).code,
            kExitUsage);
  const Result missing = run({"solve", "--tree", fx("lake.tree"), "--rule", "eu_max"});
  EXPECT_EQ(missing.code, kExitUsage);
  EXPECT_NE(missing.err.find("error:"), std::string::npos);
  EXPECT_EQ(run({"check-properties", "--rule", "eu_max", "--props", "P99"}).code,
            kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(CliTest, CheckPropertiesIsDeterministic) {
  const std::vector<std::string> args{"check-properties", "--rule", "pointwise_dominance",
                                      "--props", "P2", "--budget", "300", "--seed", "5"};
  const Result a = run(args);
  const Result b = run(args);
  EXPECT_EQ(a.code, kExitViolation) << a.err;
  EXPECT_EQ(a.out, b.out);
  const Json j = a.json();
  ASSERT_EQ(j["properties"].size(), 1u);
  const Json& p = j["properties"][0];
  EXPECT_TRUE(p["violated"].get<bool>());
  EXPECT_TRUE(p.contains("witness"));
  EXPECT_LE(p["witness"]["states"].size(), 2u);
}

TEST(CliTest, CheckPropertiesEuMaxPasses) {
  const Result r = run({"check-properties", "--rule", "eu_max", "--props", "P1,P2,P3",
                        "--budget", "100"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_EQ(r.json()["properties"].size(), 3u);
}

TEST(CliTest, EquivAndFormat) {
  EXPECT_EQ(run({"equiv", "--tree", fx("dominance.tree"), "--tree2", fx("dominance.tree")}).code,
            kExitOk);
  EXPECT_EQ(run({"equiv", "--tree", fx("dominance.tree"), "--tree2", fx("cross.tree")}).code,
            kExitUsage);
  const std::filesystem::path other =
      std::filesystem::temp_directory_path() / "choicetree_cli_test_dominance_b.tree";
  {
    std::string text = fixtures::read("dominance.tree");
    text = text.substr(0, text.find("tree =")) + "tree = decision(leaf(z), leaf(x))\n";
    std::ofstream(other) << text;
  }
  EXPECT_EQ(run({"equiv", "--tree", fx("dominance.tree"), "--tree2", other.string()}).code,
            kExitViolation);
  std::filesystem::remove(other);
  const Result f = run({"format", "--tree", fx("lake.tree")});
  EXPECT_EQ(f.code, kExitOk);
  EXPECT_EQ(f.out, fixtures::read("lake.tree"));
}

TEST(CliTest, ExportDot) {
  const Result r = run({"export-dot", "--tree", fx("dominance.tree"), "--solution", "--rule",
                        "pointwise_dominance"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("style=dashed"), std::string::npos);
  EXPECT_EQ(run({"export-dot", "--tree", fx("dominance.tree"), "--solution"}).code, kExitUsage);
}

}  // namespace
}  // namespace choicetree::cli
