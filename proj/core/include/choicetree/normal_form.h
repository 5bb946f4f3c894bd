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

#ifndef CHOICETREE_NORMAL_FORM_H_
#define CHOICETREE_NORMAL_FORM_H_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "choicetree/gamble.h"
#include "choicetree/tree.h"

namespace choicetree {

// Enumerations beyond this many normal form decisions (or gambles) fail
// with kEnumerationLimitExceeded unless the caller raises the cap.
inline constexpr std::size_t kDefaultEnumerationCap = 100000;

// A normal form decision of a tree, stored as the decision arcs it keeps.
// Each arc is named by the address of the node it leads to, so a strategy
// is a sorted list of NodeIds: one per decision node it reaches.
class Strategy {
 public:
  Strategy() = default;
  explicit Strategy(std::vector<NodeId> arcs);

  const std::vector<NodeId>& arcs() const { return arcs_; }
  bool keeps(const NodeId& arc_child) const;

  // The same strategy seen from a parent whose child `index` is our root.
  Strategy under(std::uint32_t index) const;

  std::string to_string() const;

  friend auto operator<=>(const Strategy&, const Strategy&) = default;
  friend bool operator==(const Strategy&, const Strategy&) = default;

 private:
  std::vector<NodeId> arcs_;
};

// A set of normal form decisions of one tree, in canonical order.
class NormalFormSolution {
 public:
  NormalFormSolution() = default;
  explicit NormalFormSolution(std::vector<Strategy> members);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const Strategy& s) const;
  bool is_subset_of(const NormalFormSolution& other) const;
  const std::vector<Strategy>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const NormalFormSolution&,
                         const NormalFormSolution&) = default;

 private:
  std::vector<Strategy> members_;
};

NormalFormSolution set_difference(const NormalFormSolution& a,
                                  const NormalFormSolution& b);

// A normal form decision together with its gamble.
struct Plan {
  Strategy strategy;
  Gamble gamble;
};

// ⊔ 𝒯_i: every child plan behind the arc to its child.
std::vector<Plan> glue_decision(const std::vector<std::vector<Plan>>& children);

// ⊙ E_i 𝒯_i: one plan per combination of child plans. Throws
// kEnumerationLimitExceeded past `cap` combinations.
std::vector<Plan> glue_chance(std::span<const Event> events,
                              const std::vector<std::vector<Plan>>& children,
                              std::size_t cap = kDefaultEnumerationCap);

// nfd(T) with gambles attached, in canonical strategy order. Chance roots
// multiply, decision roots add.
std::vector<Plan> enumerate_plans(const DecisionTree& tree,
                                  std::size_t cap = kDefaultEnumerationCap);

// nfd(T).
NormalFormSolution nfd(const DecisionTree& tree,
                       std::size_t cap = kDefaultEnumerationCap);

// |nfd(T)| without enumerating (saturates at SIZE_MAX).
std::size_t count_normal_form_decisions(const DecisionTree& tree);

// gamb(T) by the leaf / ⊕ / ∪ recursion over gamble sets.
GambleSet gamb(const DecisionTree& tree, std::size_t cap = kDefaultEnumerationCap);

// gamb(𝒯) for a set of strategies: union of their gambles.
GambleSet gamb(const DecisionTree& tree, const NormalFormSolution& solution);

// The gamble of one normal form decision, found by following the strategy
// state by state. Throws kInvalidArgument if `strategy` is not a normal form
// decision of `tree`.
Gamble gamble_of(const DecisionTree& tree, const Strategy& strategy);

// True iff `strategy` keeps exactly one arc at every decision node it
// reaches and nothing else.
bool is_normal_form_decision(const DecisionTree& tree, const Strategy& strategy);

// "N is in U": every decision on the path to `node` takes the arc toward it.
bool strategy_contains(const DecisionTree& tree, const Strategy& strategy,
                       const NodeId& node);

// st_N(U) for a single strategy that contains N.
Strategy restrict_strategy(const Strategy& strategy, const NodeId& node);

// st_N(𝒯) = { st_N(U) : U ∈ 𝒯 and N in U }. Throws kUnknownNode.
NormalFormSolution restrict_solution(const DecisionTree& tree,
                                     const NormalFormSolution& solution,
                                     const NodeId& node);

// The strategy as a tree of its own: every decision node keeps one child.
DecisionTree strategy_tree(const DecisionTree& tree, const Strategy& strategy);

struct EquivalenceVerdict {
  bool equivalent = false;       // gamb(t1) == gamb(t2)
  bool same_root_event = false;  // ev(t1) == ev(t2)

  explicit operator bool() const { return equivalent; }
};

// Throws kSpaceMismatch when the trees live on different spaces.
EquivalenceVerdict strategically_equivalent(
    const DecisionTree& t1, const DecisionTree& t2,
    std::size_t cap = kDefaultEnumerationCap);

}  // namespace choicetree

#endif  // CHOICETREE_NORMAL_FORM_H_
