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

#ifndef CHOICETREE_TESTS_SUPPORT_FIXTURES_H_
#define CHOICETREE_TESTS_SUPPORT_FIXTURES_H_

#include <fstream>
#include <sstream>
#include <string>

#include "choicetree/document.h"

namespace choicetree::fixtures {

inline std::string path(const std::string& name) {
  return std::string(CHOICETREE_FIXTURE_DIR) + "/" + name;
}

inline std::string read(const std::string& name) {
  std::ifstream in(path(name), std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline TreeDocument load(const std::string& name) {
  return parse_tree_document(read(name));
}

inline ChoiceContext context(const TreeDocument& doc, const std::string& name) {
  return parse_context(read(name), doc.space, doc.rewards);
}

// Gamble over the document's states from reward names.
inline Gamble gamble(const TreeDocument& doc,
                     std::initializer_list<const char*> names) {
  std::vector<RewardId> v;
  for (const char* n : names) v.push_back(*doc.rewards.find(n));
  return Gamble(std::move(v));
}

inline Event event(const TreeDocument& doc, const std::string& name) {
  for (const NamedEvent& e : doc.events) {
    if (e.name == name) return e.event;
  }
  return doc.space.none();
}

}  // namespace choicetree::fixtures

#endif  // CHOICETREE_TESTS_SUPPORT_FIXTURES_H_
