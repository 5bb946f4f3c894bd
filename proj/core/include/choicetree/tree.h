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

#ifndef CHOICETREE_TREE_H_
#define CHOICETREE_TREE_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "choicetree/gamble.h"
#include "choicetree/space.h"

namespace choicetree {

// Address of a node: child indices from the root (empty path = root).
class NodeId {
 public:
  NodeId() = default;
  explicit NodeId(std::vector<std::uint32_t> path) : path_(std::move(path)) {}
  NodeId(std::initializer_list<std::uint32_t> path) : path_(path) {}

  static NodeId root() { return NodeId(); }

  const std::vector<std::uint32_t>& path() const { return path_; }
  std::size_t depth() const { return path_.size(); }
  bool is_root() const { return path_.empty(); }

  NodeId child(std::uint32_t index) const;
  NodeId parent() const;
  // Ancestor-or-self test.
  bool is_prefix_of(const NodeId& other) const;
  // Path of `this` as seen from `ancestor`; requires ancestor.is_prefix_of(*this).
  NodeId relative_to(const NodeId& ancestor) const;
  // `prefix` followed by this path.
  NodeId under(const NodeId& prefix) const;
  NodeId under(std::uint32_t first) const;

  // "root" or dotted indices such as "0.1.0".
  std::string to_string() const;

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
  friend bool operator==(const NodeId&, const NodeId&) = default;

 private:
  std::vector<std::uint32_t> path_;
};

enum class NodeKind { kLeaf, kDecision, kChance };

class Node;

struct ChanceBranch;

// One node of the ⊔ / ⊙ / leaf algebra together with everything below it.
class Node {
 public:
  NodeKind kind() const { return kind_; }
  bool is_leaf() const { return kind_ == NodeKind::kLeaf; }
  bool is_decision() const { return kind_ == NodeKind::kDecision; }
  bool is_chance() const { return kind_ == NodeKind::kChance; }

  // Leaf only.
  RewardId reward() const;

  std::size_t num_children() const { return children_.size(); }
  const std::vector<Node>& children() const { return children_; }
  const Node& child(std::size_t i) const { return children_.at(i); }
  // Chance only: events()[i] labels the arc to child(i).
  const std::vector<Event>& events() const { return events_; }

  std::size_t subtree_size() const;

  friend bool operator==(const Node& a, const Node& b);

 private:
  friend Node leaf(RewardId reward);
  friend Node decision(std::vector<Node> children);
  friend Node chance(std::vector<ChanceBranch> branches);

  NodeKind kind_ = NodeKind::kLeaf;
  RewardId reward_{};
  std::vector<Node> children_;
  std::vector<Event> events_;
};

struct ChanceBranch {
  Event event;
  Node subtree;
};

Node leaf(RewardId reward);
// ⊔ children. A single child gives the unary ⊔T.
Node decision(std::vector<Node> children);
// ⊙ E_i T_i. Throws kNotAPartition unless the events partition the space.
Node chance(std::vector<ChanceBranch> branches);

// A decision tree plus ev(T), the event accumulated before its root.
class DecisionTree {
 public:
  DecisionTree(Node root, Event root_event);

  const Node& root() const { return *root_; }
  const Event& root_event() const { return root_event_; }
  const PossibilitySpace& space() const { return root_event_.space(); }

  // nullptr when `id` does not resolve.
  const Node* find(const NodeId& id) const;
  const Node& at(const NodeId& id) const;
  bool contains(const NodeId& id) const { return find(id) != nullptr; }
  // ev(st_N(T)): root event intersected with the chance arcs on the path.
  Event event_at(const NodeId& id) const;

  std::size_t node_count() const { return root_->subtree_size(); }

  // Preorder walk handing out each node with its address and ev.
  void visit(const std::function<void(const NodeId&, const Node&, const Event&)>&
                 fn) const;

  // Structural equality, treating chance branches as unordered.
  friend bool operator==(const DecisionTree& a, const DecisionTree& b);

 private:
  friend DecisionTree subtree_at(const DecisionTree& tree, const NodeId& node);
  DecisionTree(std::shared_ptr<const Node> root, Event root_event);

  std::shared_ptr<const Node> root_;
  Event root_event_;
};

struct ValidationResult {
  bool consistent = true;
  // First node (preorder) whose accumulated event is empty.
  std::optional<NodeId> offending;

  explicit operator bool() const { return consistent; }
};

// A tree is consistent when ev(st_N(T)) is non-empty at every node.
ValidationResult validate(const DecisionTree& tree);

// Throws kEmptySubtreeEvent when validate() rejects the tree.
void require_consistent(const DecisionTree& tree);

// st_N(T), carrying ev(st_N(T)) as its root event. Throws kUnknownNode.
DecisionTree subtree_at(const DecisionTree& tree, const NodeId& node);

// Makes an inconsistent tree consistent: a chance branch whose accumulated
// event is empty is dropped and its event merged into the first surviving
// sibling, which leaves every remaining ev unchanged. Throws
// kEmptySubtreeEvent if the root event itself is empty.
DecisionTree prune_inconsistent(const DecisionTree& tree);

// ⊔_{X ∈ 𝒳} ⊙_{r attained by X} X^{-1}(r) r with ev = A: a consistent tree
// whose gamb is 𝒳 whenever 𝒳 is A-consistent. Rewards are taken verbatim.
DecisionTree tree_for_gamble_set(const GambleSet& set, const Event& a);

}  // namespace choicetree

#endif  // CHOICETREE_TREE_H_
