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

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "choicetree/document.h"
#include "choicetree/generators.h"
#include "choicetree/laws.h"
#include "choicetree/normal_form.h"
#include "choicetree/solvers.h"
#include "choicetree/theorems.h"

namespace choicetree {
namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(CHOICETREE_FIXTURE_DIR) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// The first 50 trees of the default corpus.
const std::vector<GeneratedTree>& corpus() {
  static const std::vector<GeneratedTree> trees = [] {
    std::vector<GeneratedTree> out;
    const CorpusConfig c = default_corpus();
    for (std::size_t i = 0; i < 50; ++i) out.push_back(corpus_tree(c, i));
    return out;
  }();
  return trees;
}

void BM_ParseLake(benchmark::State& state) {
  const std::string text = read_fixture("lake.tree");
  for (auto _ : state) benchmark::DoNotOptimize(parse_tree_document(text));
}
BENCHMARK(BM_ParseLake);

void BM_GambCorpus(benchmark::State& state) {
  for (auto _ : state) {
    for (const GeneratedTree& g : corpus()) benchmark::DoNotOptimize(gamb(g.tree));
  }
}
BENCHMARK(BM_GambCorpus)->Unit(benchmark::kMillisecond);

void BM_Solve(benchmark::State& state) {
  const auto kind = static_cast<RuleKind>(state.range(0));
  const auto method = static_cast<SolveMethod>(state.range(1));
  for (auto _ : state) {
    for (const GeneratedTree& g : corpus()) {
      const RulePtr rule = make_rule(kind, g.context);
      benchmark::DoNotOptimize(solve(g.tree, *rule, method));
    }
  }
  state.SetLabel(std::string(to_string(kind)) + "/" + std::string(to_string(method)));
}
BENCHMARK(BM_Solve)
    ->ArgsProduct({{static_cast<int>(RuleKind::kEuMax),
                    static_cast<int>(RuleKind::kPointwiseDominance),
                    static_cast<int>(RuleKind::kMaximality),
                    static_cast<int>(RuleKind::kEAdmissibility)},
                   {static_cast<int>(SolveMethod::kNormal),
                    static_cast<int>(SolveMethod::kBackward)}})
    ->Unit(benchmark::kMillisecond);

void BM_SubtreePerfectness(benchmark::State& state) {
  for (auto _ : state) {
    for (const GeneratedTree& g : corpus()) {
      const RulePtr rule = make_rule(RuleKind::kEuMax, g.context);
      benchmark::DoNotOptimize(check_subtree_perfectness(g.tree, *rule));
    }
  }
}
BENCHMARK(BM_SubtreePerfectness)->Unit(benchmark::kMillisecond);

void BM_FalsifyP2(benchmark::State& state) {
  SamplingConfig sampling;
  sampling.budget = static_cast<std::size_t>(state.range(0));
  const RuleFactory factory = rule_factory(RuleKind::kEuMax);
  for (auto _ : state) {
    benchmark::DoNotOptimize(falsify_property(PropertyId::kP2Intersection, factory,
                                              GenConfig{}, sampling, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FalsifyP2)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace choicetree

BENCHMARK_MAIN();
