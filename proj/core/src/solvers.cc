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

#include "choicetree/solvers.h"

#include <algorithm>
#include <utility>

#include "choicetree/error.h"

namespace choicetree {

std::string_view to_string(SolveMethod method) {
  return method == SolveMethod::kNormal ? "normal" : "backward";
}

std::vector<Plan> norm_opt_plans(const std::vector<Plan>& candidates,
                                 const Event& ev, const ChoiceRule& rule,
                                 SolveStats* stats) {
  std::vector<Gamble> gambles;
  gambles.reserve(candidates.size());
  for (const Plan& p : candidates) gambles.push_back(p.gamble);
  const GambleSet chosen = rule.select(GambleSet(std::move(gambles)), ev);
  if (stats != nullptr) {
    ++stats->select_calls;
    stats->largest_candidate_set =
        std::max(stats->largest_candidate_set, candidates.size());
  }
  std::vector<Plan> out;
  for (const Plan& p : candidates) {
    if (chosen.contains(p.gamble)) out.push_back(p);
  }
  return out;
}

namespace {

SolveReport make_report(std::vector<Plan> plans, SolveMethod method,
                        SolveStats stats) {
  SolveReport report;
  std::vector<Strategy> members;
  std::vector<Gamble> gambles;
  for (Plan& p : plans) {
    members.push_back(std::move(p.strategy));
    gambles.push_back(std::move(p.gamble));
  }
  report.solution = NormalFormSolution(std::move(members));
  report.induced_gambles = GambleSet(std::move(gambles));
  report.method = method;
  report.stats = stats;
  return report;
}

std::vector<Plan> back_opt_impl(const Node& node, const Event& ev,
                                const ChoiceRule& rule, std::size_t n_states,
                                std::size_t cap, SolveStats& stats) {
  if (node.is_leaf()) {
    return {Plan{Strategy(), Gamble::constant(n_states, node.reward())}};
  }
  std::vector<std::vector<Plan>> parts;
  for (std::size_t i = 0; i < node.num_children(); ++i) {
    const Event child_ev = node.is_chance() ? ev & node.events()[i] : ev;
    parts.push_back(
        back_opt_impl(node.child(i), child_ev, rule, n_states, cap, stats));
  }
  std::vector<Plan> glued = node.is_decision()
                                ? glue_decision(parts)
                                : glue_chance(node.events(), parts, cap);
  return norm_opt_plans(glued, ev, rule, &stats);
}

SolveStats base_stats(const DecisionTree& tree) {
  SolveStats stats;
  stats.node_count = tree.node_count();
  stats.nfd_count = count_normal_form_decisions(tree);
  return stats;
}

}  // namespace

SolveReport norm_opt(const DecisionTree& tree, const ChoiceRule& rule,
                     std::size_t cap) {
  require_consistent(tree);
  SolveStats stats = base_stats(tree);
  std::vector<Plan> kept =
      norm_opt_plans(enumerate_plans(tree, cap), tree.root_event(), rule, &stats);
  return make_report(std::move(kept), SolveMethod::kNormal, stats);
}

SolveReport back_opt(const DecisionTree& tree, const ChoiceRule& rule,
                     std::size_t cap) {
  require_consistent(tree);
  SolveStats stats = base_stats(tree);
  std::vector<Plan> kept = back_opt_impl(tree.root(), tree.root_event(), rule,
                                         tree.space().size(), cap, stats);
  std::sort(kept.begin(), kept.end(), [](const Plan& a, const Plan& b) {
    return a.strategy < b.strategy;
  });
  return make_report(std::move(kept), SolveMethod::kBackward, stats);
}

SolveReport solve(const DecisionTree& tree, const ChoiceRule& rule,
                  SolveMethod method, std::size_t cap) {
  return method == SolveMethod::kNormal ? norm_opt(tree, rule, cap)
                                        : back_opt(tree, rule, cap);
}

BackwardComparison compare_backward(const DecisionTree& tree,
                                    const ChoiceRule& rule, std::size_t cap) {
  BackwardComparison out;
  out.normal = norm_opt(tree, rule, cap);
  out.backward = back_opt(tree, rule, cap);
  out.only_normal = set_difference(out.normal.solution, out.backward.solution);
  out.only_backward = set_difference(out.backward.solution, out.normal.solution);
  return out;
}

ExtensiveSolution::ExtensiveSolution(DecisionTree tree, std::set<NodeId> kept_arcs,
                                     std::set<NodeId> reachable_nodes)
    : tree_(std::move(tree)),
      kept_(std::move(kept_arcs)),
      reachable_(std::move(reachable_nodes)) {}

bool ExtensiveSolution::is_kept(const NodeId& arc_child) const {
  return kept_.contains(arc_child);
}

bool ExtensiveSolution::is_reachable(const NodeId& node) const {
  return reachable_.contains(node);
}

std::vector<NodeId> ExtensiveSolution::pruned_arcs() const {
  std::vector<NodeId> out;
  tree_.visit([&](const NodeId& id, const Node& node, const Event&) {
    if (!node.is_decision() || !is_reachable(id)) return;
    for (std::uint32_t i = 0; i < node.num_children(); ++i) {
      NodeId arc = id.child(i);
      if (!is_kept(arc)) out.push_back(std::move(arc));
    }
  });
  return out;
}

ExtensiveSolution extract_extensive(const DecisionTree& tree,
                                    const NormalFormSolution& solution) {
  if (solution.empty()) {
    throw Error(ErrorKind::kEmptySolution,
                "cannot extract an extensive solution from an empty set");
  }
  std::set<NodeId> kept;
  for (const Strategy& s : solution) {
    if (!is_normal_form_decision(tree, s)) {
      throw Error(ErrorKind::kInvalidArgument,
                  s.to_string() + " is not a normal form decision of the tree");
    }
    kept.insert(s.arcs().begin(), s.arcs().end());
  }
  std::set<NodeId> reachable;
  tree.visit([&](const NodeId& id, const Node&, const Event&) {
    if (id.is_root() || (reachable.contains(id.parent()) &&
                         (!tree.at(id.parent()).is_decision() || kept.contains(id)))) {
      reachable.insert(id);
    }
  });
  return ExtensiveSolution(tree, std::move(kept), std::move(reachable));
}

namespace {

std::vector<Strategy> extensive_impl(const Node& node, const NodeId& id,
                                     const ExtensiveSolution& e,
                                     std::size_t cap) {
  switch (node.kind()) {
    case NodeKind::kLeaf:
      return {Strategy()};
    case NodeKind::kDecision: {
      std::vector<Strategy> out;
      for (std::uint32_t i = 0; i < node.num_children(); ++i) {
        const NodeId arc = id.child(i);
        if (!e.is_kept(arc)) continue;
        for (const Strategy& s : extensive_impl(node.child(i), arc, e, cap)) {
          std::vector<NodeId> arcs = s.arcs();
          arcs.push_back(arc);
          out.emplace_back(std::move(arcs));
          if (out.size() > cap) {
            throw Error(ErrorKind::kEnumerationLimitExceeded,
                        "extensive solution has too many normal form decisions");
          }
        }
      }
      return out;
    }
    case NodeKind::kChance: {
      std::vector<Strategy> acc{Strategy()};
      for (std::uint32_t i = 0; i < node.num_children(); ++i) {
        std::vector<Strategy> part =
            extensive_impl(node.child(i), id.child(i), e, cap);
        if (acc.size() * part.size() > cap) {
          throw Error(ErrorKind::kEnumerationLimitExceeded,
                      "extensive solution has too many normal form decisions");
        }
        std::vector<Strategy> next;
        for (const Strategy& a : acc) {
          for (const Strategy& b : part) {
            std::vector<NodeId> arcs = a.arcs();
            arcs.insert(arcs.end(), b.arcs().begin(), b.arcs().end());
            next.emplace_back(std::move(arcs));
          }
        }
        acc = std::move(next);
      }
      return acc;
    }
  }
  return {};
}

}  // namespace

NormalFormSolution nfd(const ExtensiveSolution& extensive, std::size_t cap) {
  return NormalFormSolution(
      extensive_impl(extensive.tree().root(), NodeId::root(), extensive, cap));
}

ExtensiveEquivalence check_solution_extensive_equivalence(
    const DecisionTree& tree, const NormalFormSolution& solution,
    std::size_t cap) {
  ExtensiveEquivalence out;
  out.solution = solution;
  out.extensive_nfd = nfd(extract_extensive(tree, solution), cap);
  out.equivalent = out.extensive_nfd == solution;
  if (!out.equivalent) {
    NormalFormSolution extra = set_difference(out.extensive_nfd, solution);
    if (!extra.empty()) out.witness = extra.members().front();
  }
  return out;
}

ExtensiveEquivalence check_normal_extensive_equivalence(const DecisionTree& tree,
                                                        const ChoiceRule& rule,
                                                        std::size_t cap) {
  return check_solution_extensive_equivalence(
      tree, norm_opt(tree, rule, cap).solution, cap);
}

}  // namespace choicetree
