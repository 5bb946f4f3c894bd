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

#ifndef CHOICETREE_THEOREMS_H_
#define CHOICETREE_THEOREMS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "choicetree/generators.h"
#include "choicetree/laws.h"

namespace choicetree {

// Cross-checks tying property verdicts to solver behaviour over one shared
// corpus: property instances and trees drawn from the same seed.
struct CorpusConfig {
  GenConfig instances;  // property instances
  GenConfig trees;      // decision trees
  std::size_t instance_budget = 1000;
  std::size_t tree_count = 200;
  std::uint64_t seed = 1;
  bool shrink = true;
};

// The default tree corpus: depth <= 4, at most 8 states.
CorpusConfig default_corpus();

// The index-th tree of the corpus, the same one every theorem check sees.
GeneratedTree corpus_tree(const CorpusConfig& corpus, std::size_t index);

struct TreeFailure {
  std::size_t index = 0;  // position in the corpus
  std::uint64_t seed = 0;
  std::string detail;
};

struct TheoremCheck {
  std::string rule;
  std::vector<LawReport> premises;
  bool premises_corroborated = false;
  std::size_t trees_checked = 0;
  std::vector<TreeFailure> tree_failures;

  // A tree failure while every premise is corroborated contradicts the
  // theorem on this corpus: that is a framework bug, not a finding.
  bool consistent() const {
    return !(premises_corroborated && !tree_failures.empty());
  }
};

// Properties 1-3 against strong subtree perfectness.
TheoremCheck check_subtree_perfectness_theorem(const RuleFactory& factory,
                                               const CorpusConfig& corpus);

// Properties 7-10 against back_opt == norm_opt.
TheoremCheck check_backward_induction_theorem(const RuleFactory& factory,
                                              const CorpusConfig& corpus);

// Properties 7, 9, 10 against weak subtree perfectness.
TheoremCheck check_weak_perfectness_theorem(const RuleFactory& factory,
                                            const CorpusConfig& corpus);

struct AgreementCheck {
  std::string rule;
  std::vector<LawReport> reports;
  bool agree = false;
};

// Properties 2, 4, 5, 6 must be all corroborated or all violated.
AgreementCheck check_intersection_equivalents(const RuleFactory& factory,
                                              const GenConfig& gen,
                                              std::size_t budget,
                                              std::uint64_t seed);

// Property 11 must be violated exactly when Property 8 or 9 is.
AgreementCheck check_path_independence_agreement(const RuleFactory& factory,
                                                 const GenConfig& gen,
                                                 std::size_t budget,
                                                 std::uint64_t seed);

// Turns a Property 9 witness (Y ⊆ X) into the two-branch tree
// ⊔(tree of Y, tree of X∖Y) with ev = A, on which weak subtree perfectness
// fails at the first branch.
std::optional<DecisionTree> preservation_witness_tree(
    const PropertyInstance& instance);

}  // namespace choicetree

#endif  // CHOICETREE_THEOREMS_H_
