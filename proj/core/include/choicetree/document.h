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

#ifndef CHOICETREE_DOCUMENT_H_
#define CHOICETREE_DOCUMENT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "choicetree/choice.h"
#include "choicetree/gamble.h"
#include "choicetree/space.h"
#include "choicetree/tree.h"

namespace choicetree {

struct NamedEvent {
  std::string name;
  Event event;
};

// A parsed tree file. Grammar, one statement per line, '#' comments:
//   omega <label>+
//   reward <name> = <int>[/<int>]
//   event <name> = <label>+
//   root_event <event-name>            (optional, default Ω)
//   tree = <expr>                      (may span lines while parens are open)
//   <expr> ::= leaf(<reward>) | decision(<expr>, ...)
//            | chance(<event>: <expr>, ...)
// Leading comment lines are kept so canonical files round-trip exactly.
struct TreeDocument {
  std::vector<std::string> header;
  PossibilitySpace space;
  RewardTable rewards;
  std::vector<NamedEvent> events;
  std::optional<std::string> root_event_name;
  DecisionTree tree;

  // First declared name whose membership equals `event`, if any.
  std::optional<std::string> name_of(const Event& event) const;
};

// Throws kSyntaxError ("line L, col C: ..."), kUnknownReference,
// kDuplicateDefinition, or kNotAPartition for a bad chance node.
TreeDocument parse_tree_document(std::string_view text);

// Canonical text: header, then omega, rewards, events and the tree as
// blank-line separated blocks. A node is printed on one line when it fits in
// 72 columns, otherwise its children go on their own lines, indented by two.
std::string serialize_tree_document(const TreeDocument& doc);

// Wraps a programmatic tree; events get names built from their labels.
TreeDocument make_tree_document(const DecisionTree& tree,
                                const RewardTable& rewards);

// Context file, tokens separated by whitespace, '#' comments:
//   prob <label> = <rational>                  (one per state)
//   credal { prob ... } { prob ... } ...       (one block per distribution)
//   utility <reward> = <rational>              (overrides the tree's value)
ChoiceContext parse_context(std::string_view text, const PossibilitySpace& space,
                            const RewardTable& rewards);

std::string serialize_context(const ChoiceContext& context,
                              const PossibilitySpace& space);

}  // namespace choicetree

#endif  // CHOICETREE_DOCUMENT_H_
