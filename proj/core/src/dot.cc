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

#include "choicetree/dot.h"

#include "choicetree/rational.h"

namespace choicetree {

namespace {

std::string dot_name(const NodeId& id) {
  std::string out = "n";
  for (std::uint32_t i : id.path()) out += "_" + std::to_string(i);
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const TreeDocument& doc,
                       const ExtensiveSolution* solution) {
  std::string out = "digraph tree {\n  rankdir=LR;\n";
  std::string arcs;
  doc.tree.visit([&](const NodeId& id, const Node& node, const Event&) {
    const std::string name = dot_name(id);
    if (node.is_leaf()) {
      const RewardId r = node.reward();
      out += "  " + name + " [shape=none, label=" +
             quoted(doc.rewards.name(r) + " (" +
                    format_rational(doc.rewards.utility(r)) + ")") +
             "];\n";
      return;
    }
    out += "  " + name + (node.is_decision() ? " [shape=box, label=\"\"];\n"
                                             : " [shape=circle, label=\"\"];\n");
    const bool reachable = solution == nullptr || solution->is_reachable(id);
    for (std::size_t i = 0; i < node.num_children(); ++i) {
      const NodeId child = id.child(static_cast<std::uint32_t>(i));
      std::vector<std::string> attrs;
      if (node.is_chance()) {
        auto event = doc.name_of(node.events()[i]);
        attrs.push_back("label=" +
                        quoted(event ? *event : node.events()[i].to_string()));
      }
      if (!reachable) {
        attrs.push_back("style=dotted");
        attrs.push_back("color=gray");
      } else if (solution != nullptr && node.is_decision() &&
                 !solution->is_kept(child)) {
        attrs.push_back("style=dashed");
      }
      arcs += "  " + name + " -> " + dot_name(child);
      if (!attrs.empty()) {
        arcs += " [";
        for (std::size_t k = 0; k < attrs.size(); ++k) {
          arcs += (k == 0 ? "" : ", ") + attrs[k];
        }
        arcs += "]";
      }
      arcs += ";\n";
    }
  });
  return out + arcs + "}\n";
}

}  // namespace choicetree
