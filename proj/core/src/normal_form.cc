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

#include "choicetree/normal_form.h"

#include <algorithm>
#include <iterator>
#include <limits>
#include <string>
#include <utility>

#include "choicetree/error.h"

namespace choicetree {

Strategy::Strategy(std::vector<NodeId> arcs) : arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
}

bool Strategy::keeps(const NodeId& arc_child) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), arc_child);
}

Strategy Strategy::under(std::uint32_t index) const {
  Strategy out;
  out.arcs_.reserve(arcs_.size());
  for (const NodeId& a : arcs_) out.arcs_.push_back(a.under(index));
  return out;
}

std::string Strategy::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (i != 0) out += ", ";
    out += arcs_[i].to_string();
  }
  return out + "]";
}

NormalFormSolution::NormalFormSolution(std::vector<Strategy> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool NormalFormSolution::contains(const Strategy& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

bool NormalFormSolution::is_subset_of(const NormalFormSolution& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

NormalFormSolution set_difference(const NormalFormSolution& a,
                                  const NormalFormSolution& b) {
  std::vector<Strategy> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return NormalFormSolution(std::move(out));
}

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::size_t count_impl(const Node& node) {
  switch (node.kind()) {
    case NodeKind::kLeaf:
      return 1;
    case NodeKind::kChance: {
      std::size_t n = 1;
      for (const Node& c : node.children()) n = saturating_mul(n, count_impl(c));
      return n;
    }
    case NodeKind::kDecision: {
      std::size_t n = 0;
      for (const Node& c : node.children()) n = saturating_add(n, count_impl(c));
      return n;
    }
  }
  return 0;
}

void require_within_cap(const DecisionTree& tree, std::size_t cap) {
  const std::size_t n = count_impl(tree.root());
  if (n > cap) {
    throw Error(ErrorKind::kEnumerationLimitExceeded,
                "tree has more than " + std::to_string(cap) +
                    " normal form decisions");
  }
}

std::vector<Plan> plans_impl(const Node& node, std::size_t n_states) {
  switch (node.kind()) {
    case NodeKind::kLeaf:
      return {Plan{Strategy(), Gamble::constant(n_states, node.reward())}};
    case NodeKind::kDecision:
    case NodeKind::kChance: {
      std::vector<std::vector<Plan>> parts;
      for (const Node& c : node.children()) {
        parts.push_back(plans_impl(c, n_states));
      }
      if (node.is_decision()) return glue_decision(parts);
      return glue_chance(node.events(), parts, kSaturated);
    }
  }
  return {};
}

GambleSet gamb_impl(const Node& node, std::size_t n_states, std::size_t cap) {
  switch (node.kind()) {
    case NodeKind::kLeaf:
      return GambleSet{Gamble::constant(n_states, node.reward())};
    case NodeKind::kDecision: {
      std::vector<GambleSet> sets;
      for (const Node& c : node.children()) {
        sets.push_back(gamb_impl(c, n_states, cap));
      }
      return set_union(sets);
    }
    case NodeKind::kChance: {
      std::vector<GambleSet> sets;
      for (const Node& c : node.children()) {
        sets.push_back(gamb_impl(c, n_states, cap));
      }
      return gamble_set_sum(node.events(), sets, cap);
    }
  }
  return {};
}

// Index of the unique kept arc below decision node `id`, or nullopt when the
// strategy keeps zero or several.
std::optional<std::uint32_t> kept_arc(const Node& node, const NodeId& id,
                                      const Strategy& strategy) {
  std::optional<std::uint32_t> found;
  for (std::uint32_t i = 0; i < node.num_children(); ++i) {
    if (strategy.keeps(id.child(i))) {
      if (found) return std::nullopt;
      found = i;
    }
  }
  return found;
}

// Counts the arcs a well-formed strategy uses; -1 on a malformed one.
long check_impl(const Node& node, const NodeId& id, const Strategy& strategy) {
  switch (node.kind()) {
    case NodeKind::kLeaf:
      return 0;
    case NodeKind::kDecision: {
      auto i = kept_arc(node, id, strategy);
      if (!i) return -1;
      long below = check_impl(node.child(*i), id.child(*i), strategy);
      return below < 0 ? -1 : below + 1;
    }
    case NodeKind::kChance: {
      long total = 0;
      for (std::uint32_t i = 0; i < node.num_children(); ++i) {
        long below = check_impl(node.child(i), id.child(i), strategy);
        if (below < 0) return -1;
        total += below;
      }
      return total;
    }
  }
  return -1;
}

Node strategy_node(const Node& node, const NodeId& id, const Strategy& strategy) {
  switch (node.kind()) {
    case NodeKind::kLeaf:
      return node;
    case NodeKind::kDecision: {
      auto i = kept_arc(node, id, strategy);
      if (!i) {
        throw Error(ErrorKind::kInvalidArgument,
                    "strategy does not pick one arc at " + id.to_string());
      }
      return decision({strategy_node(node.child(*i), id.child(*i), strategy)});
    }
    case NodeKind::kChance: {
      std::vector<ChanceBranch> branches;
      for (std::uint32_t i = 0; i < node.num_children(); ++i) {
        branches.push_back({node.events()[i],
                            strategy_node(node.child(i), id.child(i), strategy)});
      }
      return chance(std::move(branches));
    }
  }
  return node;
}

}  // namespace

std::vector<Plan> glue_decision(const std::vector<std::vector<Plan>>& children) {
  std::vector<Plan> out;
  for (std::uint32_t i = 0; i < children.size(); ++i) {
    for (const Plan& p : children[i]) {
      std::vector<NodeId> arcs{NodeId{i}};
      for (const NodeId& a : p.strategy.arcs()) arcs.push_back(a.under(i));
      out.push_back({Strategy(std::move(arcs)), p.gamble});
    }
  }
  return out;
}

std::vector<Plan> glue_chance(std::span<const Event> events,
                              const std::vector<std::vector<Plan>>& children,
                              std::size_t cap) {
  if (events.size() != children.size() || children.empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                "one plan set per chance branch required");
  }
  std::size_t total = 1;
  for (const auto& part : children) {
    if (part.empty()) {
      throw Error(ErrorKind::kEmptyInputSet, "a chance branch has no plans");
    }
    total = saturating_mul(total, part.size());
  }
  if (total > cap) {
    throw Error(ErrorKind::kEnumerationLimitExceeded,
                "gluing exceeds " + std::to_string(cap) + " plans");
  }
  const std::size_t n_states = events.front().space().size();
  const std::size_t k = children.size();
  std::vector<std::vector<std::size_t>> block_states;
  for (const Event& e : events) block_states.push_back(e.states());
  std::vector<Plan> out;
  out.reserve(total);
  std::vector<std::size_t> digit(k, 0);
  std::vector<RewardId> values(n_states);
  for (std::size_t t = 0; t < total; ++t) {
    std::vector<NodeId> arcs;
    for (std::uint32_t i = 0; i < k; ++i) {
      const Plan& p = children[i][digit[i]];
      for (const NodeId& a : p.strategy.arcs()) arcs.push_back(a.under(i));
      for (std::size_t s : block_states[i]) values[s] = p.gamble[s];
    }
    out.push_back({Strategy(std::move(arcs)), Gamble(values)});
    for (std::size_t i = 0; i < k; ++i) {
      if (++digit[i] < children[i].size()) break;
      digit[i] = 0;
    }
  }
  return out;
}

std::vector<Plan> enumerate_plans(const DecisionTree& tree, std::size_t cap) {
  require_within_cap(tree, cap);
  std::vector<Plan> plans = plans_impl(tree.root(), tree.space().size());
  std::sort(plans.begin(), plans.end(), [](const Plan& a, const Plan& b) {
    return a.strategy < b.strategy;
  });
  return plans;
}

NormalFormSolution nfd(const DecisionTree& tree, std::size_t cap) {
  std::vector<Strategy> members;
  for (Plan& p : enumerate_plans(tree, cap)) {
    members.push_back(std::move(p.strategy));
  }
  return NormalFormSolution(std::move(members));
}

std::size_t count_normal_form_decisions(const DecisionTree& tree) {
  return count_impl(tree.root());
}

GambleSet gamb(const DecisionTree& tree, std::size_t cap) {
  return gamb_impl(tree.root(), tree.space().size(), cap);
}

GambleSet gamb(const DecisionTree& tree, const NormalFormSolution& solution) {
  std::vector<Gamble> out;
  for (const Strategy& s : solution) out.push_back(gamble_of(tree, s));
  return GambleSet(std::move(out));
}

Gamble gamble_of(const DecisionTree& tree, const Strategy& strategy) {
  if (!is_normal_form_decision(tree, strategy)) {
    throw Error(ErrorKind::kInvalidArgument,
                strategy.to_string() + " is not a normal form decision");
  }
  const std::size_t n = tree.space().size();
  std::vector<RewardId> values(n);
  for (std::size_t s = 0; s < n; ++s) {
    const Node* node = &tree.root();
    NodeId id;
    while (!node->is_leaf()) {
      std::uint32_t next = 0;
      if (node->is_decision()) {
        next = *kept_arc(*node, id, strategy);
      } else {
        while (!node->events()[next].contains(s)) ++next;
      }
      node = &node->child(next);
      id = id.child(next);
    }
    values[s] = node->reward();
  }
  return Gamble(std::move(values));
}

bool is_normal_form_decision(const DecisionTree& tree, const Strategy& strategy) {
  long used = check_impl(tree.root(), NodeId::root(), strategy);
  return used >= 0 && static_cast<std::size_t>(used) == strategy.arcs().size();
}

bool strategy_contains(const DecisionTree& tree, const Strategy& strategy,
                       const NodeId& node) {
  tree.at(node);
  const Node* cur = &tree.root();
  NodeId id;
  for (std::uint32_t i : node.path()) {
    id = id.child(i);
    if (cur->is_decision() && !strategy.keeps(id)) return false;
    cur = &cur->child(i);
  }
  return true;
}

Strategy restrict_strategy(const Strategy& strategy, const NodeId& node) {
  std::vector<NodeId> arcs;
  for (const NodeId& a : strategy.arcs()) {
    if (a.depth() > node.depth() && node.is_prefix_of(a)) {
      arcs.push_back(a.relative_to(node));
    }
  }
  return Strategy(std::move(arcs));
}

NormalFormSolution restrict_solution(const DecisionTree& tree,
                                     const NormalFormSolution& solution,
                                     const NodeId& node) {
  tree.at(node);
  std::vector<Strategy> out;
  for (const Strategy& s : solution) {
    if (strategy_contains(tree, s, node)) {
      out.push_back(restrict_strategy(s, node));
    }
  }
  return NormalFormSolution(std::move(out));
}

DecisionTree strategy_tree(const DecisionTree& tree, const Strategy& strategy) {
  return DecisionTree(strategy_node(tree.root(), NodeId::root(), strategy),
                      tree.root_event());
}

EquivalenceVerdict strategically_equivalent(const DecisionTree& t1,
                                            const DecisionTree& t2,
                                            std::size_t cap) {
  if (!(t1.space() == t2.space())) {
    throw Error(ErrorKind::kSpaceMismatch,
                "trees are defined on different possibility spaces");
  }
  EquivalenceVerdict v;
  v.equivalent = gamb(t1, cap) == gamb(t2, cap);
  v.same_root_event = t1.root_event() == t2.root_event();
  return v;
}

}  // namespace choicetree
