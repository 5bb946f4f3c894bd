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

#include "choicetree_cli/cli.h"

#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "choicetree/choice.h"
#include "choicetree/document.h"
#include "choicetree/dot.h"
#include "choicetree/error.h"
#include "choicetree/generators.h"
#include "choicetree/laws.h"
#include "choicetree/normal_form.h"
#include "choicetree/rational.h"
#include "choicetree/solvers.h"
#include "json.hpp"

namespace choicetree::cli {

namespace {

using Json = nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kInvalidArgument, "cannot read file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json path_json(const NodeId& id) {
  Json out = Json::array();
  for (std::uint32_t i : id.path()) out.push_back(i);
  return out;
}

Json strategy_json(const Strategy& s) {
  Json out = Json::array();
  for (const NodeId& arc : s.arcs()) out.push_back(path_json(arc));
  return out;
}

Json solution_json(const NormalFormSolution& solution) {
  Json out = Json::array();
  for (const Strategy& s : solution) out.push_back(strategy_json(s));
  return out;
}

Json gamble_json(const Gamble& g, const RewardTable& rewards) {
  Json out = Json::array();
  for (RewardId r : g.values()) out.push_back(rewards.name(r));
  return out;
}

Json gambles_json(const GambleSet& set, const RewardTable& rewards) {
  Json out = Json::array();
  for (const Gamble& g : set) out.push_back(gamble_json(g, rewards));
  return out;
}

Json event_json(const Event& e) {
  Json out = Json::array();
  for (std::size_t s : e.states()) out.push_back(e.space().label(s));
  return out;
}

Json mass_json(const MassFunction& p) {
  Json out = Json::array();
  for (const Rational& q : p) out.push_back(format_rational(q));
  return out;
}

Json stats_json(const SolveStats& s) {
  return Json{{"largest_candidate_set", s.largest_candidate_set},
              {"nfd_count", s.nfd_count},
              {"node_count", s.node_count},
              {"select_calls", s.select_calls}};
}

Json report_json(const SolveReport& r, const RewardTable& rewards) {
  return Json{{"induced_gambles", gambles_json(r.induced_gambles, rewards)},
              {"method", std::string(to_string(r.method))},
              {"solution", solution_json(r.solution)},
              {"stats", stats_json(r.stats)}};
}

Json instance_json(const PropertyInstance& inst) {
  const RewardTable& rewards = inst.context.utilities();
  Json utilities = Json::object();
  for (std::uint32_t i = 0; i < rewards.size(); ++i) {
    utilities[rewards.name(RewardId{i})] =
        format_rational(rewards.utility(RewardId{i}));
  }
  Json sets = Json::array();
  for (const GambleSet& s : inst.sets) sets.push_back(gambles_json(s, rewards));
  Json partition = Json::array();
  for (const Event& e : inst.partition) partition.push_back(event_json(e));
  Json out{{"a", event_json(inst.a)},
           {"b", event_json(inst.b)},
           {"partition", partition},
           {"sets", sets},
           {"states", inst.space().labels()},
           {"utilities", utilities},
           {"z", gambles_json(inst.z, rewards)}};
  if (inst.context.probability()) {
    out["probability"] = mass_json(*inst.context.probability());
  }
  if (inst.context.credal()) {
    Json credal = Json::array();
    for (const MassFunction& p : *inst.context.credal()) {
      credal.push_back(mass_json(p));
    }
    out["credal"] = credal;
  }
  return out;
}

// Shared inputs of the tree commands.
struct TreeArgs {
  std::string tree;
  std::string rule;
  std::string context;
  bool prune = false;
};

struct LoadedTree {
  TreeDocument doc;
  DecisionTree tree;
  ChoiceContext context;
};

LoadedTree load_tree(const TreeArgs& args) {
  TreeDocument doc = parse_tree_document(read_file(args.tree));
  ChoiceContext context =
      args.context.empty()
          ? ChoiceContext(doc.rewards)
          : parse_context(read_file(args.context), doc.space, doc.rewards);
  DecisionTree tree = args.prune ? prune_inconsistent(doc.tree) : doc.tree;
  return LoadedTree{std::move(doc), std::move(tree), std::move(context)};
}

RulePtr load_rule(const std::string& name, const ChoiceContext& context) {
  auto kind = parse_rule_kind(name);
  if (!kind) {
    throw Error(ErrorKind::kInvalidArgument, "unknown rule '" + name + "'");
  }
  return make_rule(*kind, context);
}

void add_tree_options(CLI::App* cmd, TreeArgs& args, bool needs_rule) {
  cmd->add_option("--tree", args.tree, "Tree document")->required();
  auto* rule = cmd->add_option("--rule", args.rule, "Choice rule");
  if (needs_rule) rule->required();
  cmd->add_option("--context", args.context,
                  "Context file with probabilities, credal sets, utilities");
  cmd->add_flag("--prune", args.prune,
                "Drop subtrees with empty ev instead of rejecting the tree");
}

std::vector<PropertyId> parse_props(const std::string& list) {
  if (list == "all") return all_property_ids();
  std::vector<PropertyId> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto id = parse_property_id(item);
    if (!id) {
      throw Error(ErrorKind::kInvalidArgument, "unknown property '" + item + "'");
    }
    out.push_back(*id);
  }
  if (out.empty()) throw Error(ErrorKind::kInvalidArgument, "empty --props list");
  return out;
}

Node remap_rewards(const Node& node, const RewardTable& from, RewardTable& to) {
  if (node.is_leaf()) {
    const std::string& name = from.name(node.reward());
    auto id = to.find(name);
    if (!id) return leaf(to.add(name, from.utility(node.reward())));
    if (to.utility(*id) != from.utility(node.reward())) {
      throw Error(ErrorKind::kInvalidArgument,
                  "reward '" + name + "' has different utilities in the two trees");
    }
    return leaf(*id);
  }
  std::vector<Node> kids;
  for (const Node& c : node.children()) kids.push_back(remap_rewards(c, from, to));
  if (node.is_decision()) return decision(std::move(kids));
  std::vector<ChanceBranch> branches;
  for (std::size_t i = 0; i < kids.size(); ++i) {
    branches.push_back({node.events()[i], std::move(kids[i])});
  }
  return chance(std::move(branches));
}

void emit(std::ostream& out, const Json& report) { out << report.dump(2) << "\n"; }

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app("Solve decision trees under set-valued choice rules.",
               "choicetree");
  app.require_subcommand(1);

  TreeArgs solve_args;
  std::string method = "normal";
  bool full = false;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a tree");
  add_tree_options(solve_cmd, solve_args, true);
  solve_cmd->add_option("--method", method, "normal or backward")
      ->check(CLI::IsMember({"normal", "backward"}));
  solve_cmd->add_flag("--full", full, "Include every normal form decision");

  TreeArgs perfect_args;
  bool weak = false;
  auto* perfect_cmd =
      app.add_subcommand("check-perfect", "Check subtree perfectness");
  add_tree_options(perfect_cmd, perfect_args, true);
  perfect_cmd->add_flag("--weak", weak, "Check the weak variant only");

  TreeArgs backward_args;
  auto* backward_cmd = app.add_subcommand(
      "compare-backward", "Compare backward induction with the normal form");
  add_tree_options(backward_cmd, backward_args, true);

  std::string prop_rule;
  std::string props = "all";
  std::size_t budget = 1000;
  std::uint64_t seed = 1;
  bool no_shrink = false;
  auto* props_cmd =
      app.add_subcommand("check-properties", "Falsify choice-rule properties");
  props_cmd->add_option("--rule", prop_rule, "Choice rule")->required();
  props_cmd->add_option("--props", props, "Comma-separated list, or 'all'");
  props_cmd->add_option("--budget", budget, "Instances per property")
      ->check(CLI::PositiveNumber);
  props_cmd->add_option("--seed", seed, "Generator seed");
  props_cmd->add_flag("--no-shrink", no_shrink, "Report witnesses unshrunk");

  std::string equiv_tree;
  std::string equiv_tree2;
  auto* equiv_cmd =
      app.add_subcommand("equiv", "Check strategic equivalence of two trees");
  equiv_cmd->add_option("--tree", equiv_tree, "First tree")->required();
  equiv_cmd->add_option("--tree2", equiv_tree2, "Second tree")->required();

  TreeArgs dot_args;
  bool with_solution = false;
  auto* dot_cmd = app.add_subcommand("export-dot", "Render a tree as DOT");
  add_tree_options(dot_cmd, dot_args, false);
  dot_cmd->add_flag("--solution", with_solution,
                    "Mark arcs pruned by the solution of --rule");

  std::string format_tree;
  auto* format_cmd =
      app.add_subcommand("format", "Print a tree document in canonical form");
  format_cmd->add_option("--tree", format_tree, "Tree document")->required();

  std::vector<const char*> argv{"choicetree"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) {
      LoadedTree in = load_tree(solve_args);
      RulePtr rule = load_rule(solve_args.rule, in.context);
      const SolveMethod m =
          method == "backward" ? SolveMethod::kBackward : SolveMethod::kNormal;
      SolveReport r = solve(in.tree, *rule, m);
      ExtensiveSolution ext = extract_extensive(in.tree, r.solution);
      Json report = report_json(r, in.doc.rewards);
      report["command"] = "solve";
      report["rule"] = rule->name();
      report["states"] = in.doc.space.labels();
      Json pruned = Json::array();
      for (const NodeId& arc : ext.pruned_arcs()) pruned.push_back(path_json(arc));
      report["pruned_arcs"] = pruned;
      if (full) report["nfd"] = solution_json(nfd(in.tree));
      emit(out, report);
      return kExitOk;
    }
    if (perfect_cmd->parsed()) {
      LoadedTree in = load_tree(perfect_args);
      RulePtr rule = load_rule(perfect_args.rule, in.context);
      PerfectnessReport r = weak ? check_weak_subtree_perfectness(in.tree, *rule)
                                 : check_subtree_perfectness(in.tree, *rule);
      Json violations = Json::array();
      for (const NodeVerdict& v : r.violations) {
        violations.push_back(
            Json{{"actual", solution_json(v.actual)},
                 {"actual_gambles", gambles_json(v.actual_gambles, in.doc.rewards)},
                 {"expected", solution_json(v.expected)},
                 {"expected_gambles",
                  gambles_json(v.expected_gambles, in.doc.rewards)},
                 {"node", path_json(v.node)}});
      }
      Json report{{"command", "check-perfect"},
                  {"nodes_checked", r.nodes_checked},
                  {"perfect", r.perfect()},
                  {"root", report_json(r.root, in.doc.rewards)},
                  {"rule", rule->name()},
                  {"states", in.doc.space.labels()},
                  {"violations", violations},
                  {"weak", r.weak}};
      emit(out, report);
      return r.perfect() ? kExitOk : kExitViolation;
    }
    if (backward_cmd->parsed()) {
      LoadedTree in = load_tree(backward_args);
      RulePtr rule = load_rule(backward_args.rule, in.context);
      BackwardComparison c = compare_backward(in.tree, *rule);
      Json report{{"agree", c.agree()},
                  {"backward", report_json(c.backward, in.doc.rewards)},
                  {"command", "compare-backward"},
                  {"normal", report_json(c.normal, in.doc.rewards)},
                  {"only_backward", solution_json(c.only_backward)},
                  {"only_normal", solution_json(c.only_normal)},
                  {"rule", rule->name()},
                  {"states", in.doc.space.labels()}};
      emit(out, report);
      return c.agree() ? kExitOk : kExitViolation;
    }
    if (props_cmd->parsed()) {
      auto kind = parse_rule_kind(prop_rule);
      if (!kind) {
        throw Error(ErrorKind::kInvalidArgument, "unknown rule '" + prop_rule + "'");
      }
      const std::vector<PropertyId> ids = parse_props(props);
      SamplingConfig sampling;
      sampling.budget = budget;
      sampling.shrink = !no_shrink;
      const RuleFactory factory = rule_factory(*kind);
      const GenConfig gen;
      Json reports = Json::array();
      bool any_violated = false;
      for (PropertyId id : ids) {
        LawReport r = falsify_property(id, factory, gen, sampling, seed);
        Json entry{{"instances_checked", r.instances_checked},
                   {"property", std::string(to_string(id))},
                   {"name", std::string(long_name(id))},
                   {"violated", r.violated}};
        if (r.witness) {
          const RewardTable& rewards = r.witness->context.utilities();
          Json witness = instance_json(*r.witness);
          witness["shrink_steps"] = r.shrink_steps;
          if (r.witness_verdict) {
            witness["detail"] = r.witness_verdict->detail;
            if (r.witness_verdict->expected) {
              witness["expected"] = gambles_json(*r.witness_verdict->expected, rewards);
            }
            if (r.witness_verdict->actual) {
              witness["actual"] = gambles_json(*r.witness_verdict->actual, rewards);
            }
          }
          entry["witness"] = witness;
        }
        any_violated = any_violated || r.violated;
        reports.push_back(entry);
      }
      Json report{{"budget", budget},
                  {"command", "check-properties"},
                  {"properties", reports},
                  {"rule", std::string(to_string(*kind))},
                  {"seed", seed}};
      emit(out, report);
      return any_violated ? kExitViolation : kExitOk;
    }
    if (equiv_cmd->parsed()) {
      TreeDocument d1 = parse_tree_document(read_file(equiv_tree));
      TreeDocument d2 = parse_tree_document(read_file(equiv_tree2));
      RewardTable merged = d1.rewards;
      DecisionTree t2(remap_rewards(d2.tree.root(), d2.rewards, merged),
                      d2.tree.root_event());
      EquivalenceVerdict v = strategically_equivalent(d1.tree, t2);
      Json report{{"command", "equiv"},
                  {"equivalent", v.equivalent},
                  {"gambles", gambles_json(gamb(d1.tree), merged)},
                  {"gambles2", gambles_json(gamb(t2), merged)},
                  {"same_root_event", v.same_root_event},
                  {"states", d1.space.labels()}};
      emit(out, report);
      return v.equivalent ? kExitOk : kExitViolation;
    }
    if (format_cmd->parsed()) {
      out << serialize_tree_document(parse_tree_document(read_file(format_tree)));
      return kExitOk;
    }
    if (dot_cmd->parsed()) {
      LoadedTree in = load_tree(dot_args);
      TreeDocument doc = in.doc;
      doc.tree = in.tree;
      if (!with_solution) {
        out << export_dot(doc);
        return kExitOk;
      }
      if (dot_args.rule.empty()) {
        throw Error(ErrorKind::kInvalidArgument, "--solution needs --rule");
      }
      RulePtr rule = load_rule(dot_args.rule, in.context);
      ExtensiveSolution ext = extract_extensive(in.tree, norm_opt(in.tree, *rule).solution);
      out << export_dot(doc, &ext);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace choicetree::cli
