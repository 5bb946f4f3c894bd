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

#ifndef CHOICETREE_SOLVERS_H_
#define CHOICETREE_SOLVERS_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "choicetree/choice.h"
#include "choicetree/normal_form.h"
#include "choicetree/tree.h"

namespace choicetree {

enum class SolveMethod { kNormal, kBackward };

std::string_view to_string(SolveMethod method);

struct SolveStats {
  std::size_t node_count = 0;
  std::size_t nfd_count = 0;         // |nfd(T)|
  std::size_t select_calls = 0;
  std::size_t largest_candidate_set = 0;  // most plans handed to one selection
};

struct SolveReport {
  NormalFormSolution solution;
  GambleSet induced_gambles;  // gamb(solution)
  SolveMethod method = SolveMethod::kNormal;
  SolveStats stats;
};

// Keeps the candidates whose gamble opt(·|ev) selects from the candidates'
// gambles. This is the operator on sets of normal form decisions.
std::vector<Plan> norm_opt_plans(const std::vector<Plan>& candidates,
                                 const Event& ev, const ChoiceRule& rule,
                                 SolveStats* stats = nullptr);

// {U ∈ nfd(T) : gamb(U) ⊆ opt(gamb(T) | ev(T))}. The tree must be consistent.
SolveReport norm_opt(const DecisionTree& tree, const ChoiceRule& rule,
                     std::size_t cap = kDefaultEnumerationCap);

// Backward induction: solve the children under their own ev, glue the
// survivors, then apply the normal form operator at this node.
SolveReport back_opt(const DecisionTree& tree, const ChoiceRule& rule,
                     std::size_t cap = kDefaultEnumerationCap);

SolveReport solve(const DecisionTree& tree, const ChoiceRule& rule,
                  SolveMethod method, std::size_t cap = kDefaultEnumerationCap);

struct BackwardComparison {
  SolveReport normal;
  SolveReport backward;
  NormalFormSolution only_normal;    // norm_opt ∖ back_opt
  NormalFormSolution only_backward;  // back_opt ∖ norm_opt

  bool agree() const { return only_normal.empty() && only_backward.empty(); }
};

BackwardComparison compare_backward(const DecisionTree& tree,
                                    const ChoiceRule& rule,
                                    std::size_t cap = kDefaultEnumerationCap);

// The tree with every decision arc marked kept or pruned. Arcs hanging below
// a pruned arc are additionally flagged unreachable; addresses never change.
class ExtensiveSolution {
 public:
  ExtensiveSolution(DecisionTree tree, std::set<NodeId> kept_arcs,
                    std::set<NodeId> reachable_nodes);

  const DecisionTree& tree() const { return tree_; }
  // Arcs are named by the node they lead to.
  bool is_kept(const NodeId& arc_child) const;
  bool is_reachable(const NodeId& node) const;
  // Decision arcs leaving a reachable node that are not kept.
  std::vector<NodeId> pruned_arcs() const;
  const std::set<NodeId>& kept_arcs() const { return kept_; }

 private:
  DecisionTree tree_;
  std::set<NodeId> kept_;
  std::set<NodeId> reachable_;
};

// Keeps a decision arc iff its child lies in at least one member.
// Throws kEmptySolution for an empty solution.
ExtensiveSolution extract_extensive(const DecisionTree& tree,
                                    const NormalFormSolution& solution);

// The normal form decisions that use only kept arcs.
NormalFormSolution nfd(const ExtensiveSolution& extensive,
                       std::size_t cap = kDefaultEnumerationCap);

struct ExtensiveEquivalence {
  bool equivalent = false;
  NormalFormSolution solution;      // S
  NormalFormSolution extensive_nfd;  // nfd(extract_extensive(S))
  std::optional<Strategy> witness;   // first member of nfd(E) ∖ S

  explicit operator bool() const { return equivalent; }
};

// Checks nfd(extract_extensive(T, S)) == S for an explicit solution S.
ExtensiveEquivalence check_solution_extensive_equivalence(
    const DecisionTree& tree, const NormalFormSolution& solution,
    std::size_t cap = kDefaultEnumerationCap);

// The same check with S = norm_opt(T).
ExtensiveEquivalence check_normal_extensive_equivalence(
    const DecisionTree& tree, const ChoiceRule& rule,
    std::size_t cap = kDefaultEnumerationCap);

}  // namespace choicetree

#endif  // CHOICETREE_SOLVERS_H_
