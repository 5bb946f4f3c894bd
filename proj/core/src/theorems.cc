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

#include "choicetree/theorems.h"

#include <functional>
#include <utility>

#include "choicetree/error.h"

namespace choicetree {

CorpusConfig default_corpus() {
  CorpusConfig c;
  c.trees.max_depth = 4;
  c.trees.max_children = 3;
  c.trees.min_states = 1;
  c.trees.max_states = 8;
  c.trees.nfd_ceiling = 512;
  c.instances.min_states = 2;
  c.instances.max_states = 4;
  return c;
}

namespace {

constexpr std::uint64_t kTreeStream = 0x7472656573ULL;

std::uint64_t tree_seed(const CorpusConfig& corpus, std::size_t index) {
  return instance_seed(corpus.seed ^ kTreeStream, index);
}

}  // namespace

GeneratedTree corpus_tree(const CorpusConfig& corpus, std::size_t index) {
  return random_consistent_tree(corpus.trees, tree_seed(corpus, index));
}

namespace {

std::vector<LawReport> run_premises(const std::vector<PropertyId>& ids,
                                    const RuleFactory& factory,
                                    const CorpusConfig& corpus) {
  SamplingConfig sampling;
  sampling.budget = corpus.instance_budget;
  sampling.shrink = corpus.shrink;
  std::vector<LawReport> out;
  for (PropertyId id : ids) {
    out.push_back(
        falsify_property(id, factory, corpus.instances, sampling, corpus.seed));
  }
  return out;
}

using TreeCheck = std::function<std::optional<std::string>(const DecisionTree&,
                                                           const ChoiceRule&)>;

TheoremCheck run_theorem(const std::vector<PropertyId>& ids,
                         const RuleFactory& factory, const CorpusConfig& corpus,
                         const TreeCheck& check) {
  TheoremCheck out;
  out.premises = run_premises(ids, factory, corpus);
  out.premises_corroborated = true;
  for (const LawReport& r : out.premises) {
    out.premises_corroborated = out.premises_corroborated && r.corroborated();
  }
  for (std::size_t i = 0; i < corpus.tree_count; ++i) {
    const std::uint64_t seed = tree_seed(corpus, i);
    GeneratedTree g = corpus_tree(corpus, i);
    RulePtr rule = factory(g.context);
    if (out.rule.empty()) out.rule = rule->name();
    ++out.trees_checked;
    if (auto failure = check(g.tree, *rule)) {
      out.tree_failures.push_back({i, seed, std::move(*failure)});
    }
  }
  if (out.rule.empty() && !out.premises.empty()) out.rule = out.premises[0].rule;
  return out;
}

std::optional<std::string> perfectness_failure(const PerfectnessReport& r) {
  if (r.perfect()) return std::nullopt;
  const NodeVerdict& v = r.violations.front();
  return "node " + v.node.to_string() + ": subtree solves to " +
         std::to_string(v.expected.size()) + " decisions, restriction keeps " +
         std::to_string(v.actual.size());
}

}  // namespace

TheoremCheck check_subtree_perfectness_theorem(const RuleFactory& factory,
                                               const CorpusConfig& corpus) {
  return run_theorem(
      {PropertyId::kP1Conditioning, PropertyId::kP2Intersection,
       PropertyId::kP3Mixture},
      factory, corpus, [](const DecisionTree& t, const ChoiceRule& rule) {
        return perfectness_failure(check_subtree_perfectness(t, rule));
      });
}

TheoremCheck check_backward_induction_theorem(const RuleFactory& factory,
                                              const CorpusConfig& corpus) {
  return run_theorem(
      {PropertyId::kP7BackwardConditioning, PropertyId::kP8Insensitivity,
       PropertyId::kP9Preservation, PropertyId::kP10BackwardMixture},
      factory, corpus,
      [](const DecisionTree& t,
         const ChoiceRule& rule) -> std::optional<std::string> {
        BackwardComparison c = compare_backward(t, rule);
        if (c.agree()) return std::nullopt;
        return "norm_opt keeps " + std::to_string(c.only_normal.size()) +
               " decisions back_opt drops, back_opt keeps " +
               std::to_string(c.only_backward.size()) + " extra";
      });
}

TheoremCheck check_weak_perfectness_theorem(const RuleFactory& factory,
                                            const CorpusConfig& corpus) {
  return run_theorem(
      {PropertyId::kP7BackwardConditioning, PropertyId::kP9Preservation,
       PropertyId::kP10BackwardMixture},
      factory, corpus, [](const DecisionTree& t, const ChoiceRule& rule) {
        return perfectness_failure(check_weak_subtree_perfectness(t, rule));
      });
}

namespace {

AgreementCheck run_agreement(const std::vector<PropertyId>& ids,
                             const RuleFactory& factory, const GenConfig& gen,
                             std::size_t budget, std::uint64_t seed) {
  AgreementCheck out;
  SamplingConfig sampling;
  sampling.budget = budget;
  for (PropertyId id : ids) {
    out.reports.push_back(falsify_property(id, factory, gen, sampling, seed));
    if (out.rule.empty()) out.rule = out.reports.back().rule;
  }
  return out;
}

}  // namespace

AgreementCheck check_intersection_equivalents(const RuleFactory& factory,
                                              const GenConfig& gen,
                                              std::size_t budget,
                                              std::uint64_t seed) {
  AgreementCheck out = run_agreement(
      {PropertyId::kP2Intersection, PropertyId::kP4StrongPathIndependence,
       PropertyId::kP5VeryStrongPathIndependence, PropertyId::kP6TotalPreorder},
      factory, gen, budget, seed);
  out.agree = true;
  for (const LawReport& r : out.reports) {
    out.agree = out.agree && r.violated == out.reports.front().violated;
  }
  return out;
}

AgreementCheck check_path_independence_agreement(const RuleFactory& factory,
                                                 const GenConfig& gen,
                                                 std::size_t budget,
                                                 std::uint64_t seed) {
  AgreementCheck out = run_agreement(
      {PropertyId::kP11PathIndependence, PropertyId::kP8Insensitivity,
       PropertyId::kP9Preservation},
      factory, gen, budget, seed);
  const bool p11 = out.reports[0].violated;
  const bool p8_or_p9 = out.reports[1].violated || out.reports[2].violated;
  out.agree = p11 == p8_or_p9;
  return out;
}

std::optional<DecisionTree> preservation_witness_tree(
    const PropertyInstance& instance) {
  if (instance.sets.size() != 2) return std::nullopt;
  const GambleSet& y = instance.sets[1];
  const GambleSet rest = set_difference(instance.sets[0], y);
  if (y.empty() || rest.empty()) return std::nullopt;
  const DecisionTree left = tree_for_gamble_set(y, instance.a);
  const DecisionTree right = tree_for_gamble_set(rest, instance.a);
  return DecisionTree(decision({left.root(), right.root()}), instance.a);
}

}  // namespace choicetree
