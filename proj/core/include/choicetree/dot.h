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

#ifndef CHOICETREE_DOT_H_
#define CHOICETREE_DOT_H_

#include <string>

#include "choicetree/document.h"
#include "choicetree/solvers.h"

namespace choicetree {

// Graphviz rendering. Decision nodes are boxes, chance nodes circles and
// leaves plain text "reward (utility)". Chance arcs carry event names.
// With a solution, pruned decision arcs are dashed and arcs below
// unreachable nodes are dotted gray.
std::string export_dot(const TreeDocument& doc,
                       const ExtensiveSolution* solution = nullptr);

}  // namespace choicetree

#endif  // CHOICETREE_DOT_H_
