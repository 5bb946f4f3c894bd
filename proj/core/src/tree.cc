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

#include "choicetree/tree.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "choicetree/error.h"

namespace choicetree {

NodeId NodeId::child(std::uint32_t index) const {
  std::vector<std::uint32_t> p = path_;
  p.push_back(index);
  return NodeId(std::move(p));
}

NodeId NodeId::parent() const {
  if (path_.empty()) {
    throw Error(ErrorKind::kUnknownNode, "the root has no parent");
  }
  return NodeId(std::vector<std::uint32_t>(path_.begin(), path_.end() - 1));
}

bool NodeId::is_prefix_of(const NodeId& other) const {
  return path_.size() <= other.path_.size() &&
         std::equal(path_.begin(), path_.end(), other.path_.begin());
}

NodeId NodeId::relative_to(const NodeId& ancestor) const {
  if (!ancestor.is_prefix_of(*this)) {
    throw Error(ErrorKind::kUnknownNode, ancestor.to_string() +
                                             " is not an ancestor of " +
                                             to_string());
  }
  return NodeId(std::vector<std::uint32_t>(
      path_.begin() + static_cast<std::ptrdiff_t>(ancestor.depth()), path_.end()));
}

NodeId NodeId::under(const NodeId& prefix) const {
  std::vector<std::uint32_t> p = prefix.path_;
  p.insert(p.end(), path_.begin(), path_.end());
  return NodeId(std::move(p));
}

NodeId NodeId::under(std::uint32_t first) const {
  std::vector<std::uint32_t> p;
  p.reserve(path_.size() + 1);
  p.push_back(first);
  p.insert(p.end(), path_.begin(), path_.end());
  return NodeId(std::move(p));
}

std::string NodeId::to_string() const {
  if (path_.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < path_.size(); ++i) {
    if (i != 0) out += ".";
    out += std::to_string(path_[i]);
  }
  return out;
}

RewardId Node::reward() const {
  if (kind_ != NodeKind::kLeaf) {
    throw Error(ErrorKind::kInvalidArgument, "only leaves carry a reward");
  }
  return reward_;
}

std::size_t Node::subtree_size() const {
  std::size_t n = 1;
  for (const Node& c : children_) n += c.subtree_size();
  return n;
}

bool operator==(const Node& a, const Node& b) {
  return a.kind_ == b.kind_ && a.reward_ == b.reward_ &&
         a.events_ == b.events_ && a.children_ == b.children_;
}

Node leaf(RewardId reward) {
  Node n;
  n.kind_ = NodeKind::kLeaf;
  n.reward_ = reward;
  return n;
}

Node decision(std::vector<Node> children) {
  if (children.empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                "a decision node needs at least one option");
  }
  Node n;
  n.kind_ = NodeKind::kDecision;
  n.children_ = std::move(children);
  return n;
}

Node chance(std::vector<ChanceBranch> branches) {
  if (branches.empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                "a chance node needs at least one branch");
  }
  Node n;
  n.kind_ = NodeKind::kChance;
  for (ChanceBranch& b : branches) {
    n.events_.push_back(std::move(b.event));
    n.children_.push_back(std::move(b.subtree));
  }
  require_partition(n.events_, "chance node");
  return n;
}

namespace {

void check_spaces(const Node& node, const PossibilitySpace& space) {
  if (node.is_chance() && !(node.events().front().space() == space)) {
    throw Error(ErrorKind::kSpaceMismatch,
                "chance events and root event use different spaces");
  }
  for (const Node& c : node.children()) check_spaces(c, space);
}

// Chance branches sorted by event, recursively; decision order is kept.
Node canonical(const Node& node) {
  switch (node.kind()) {
    case NodeKind::kLeaf:
      return node;
    case NodeKind::kDecision: {
      std::vector<Node> kids;
      for (const Node& c : node.children()) kids.push_back(canonical(c));
      return decision(std::move(kids));
    }
    case NodeKind::kChance: {
      std::vector<ChanceBranch> branches;
      for (std::size_t i = 0; i < node.num_children(); ++i) {
        branches.push_back({node.events()[i], canonical(node.child(i))});
      }
      std::sort(branches.begin(), branches.end(),
                [](const ChanceBranch& x, const ChanceBranch& y) {
                  return x.event < y.event;
                });
      return chance(std::move(branches));
    }
  }
  return node;
}

void visit_impl(const Node& node, NodeId& id, const Event& ev,
                const std::function<void(const NodeId&, const Node&,
                                         const Event&)>& fn) {
  fn(id, node, ev);
  for (std::uint32_t i = 0; i < node.num_children(); ++i) {
    id = id.child(i);
    if (node.is_chance()) {
      visit_impl(node.child(i), id, ev & node.events()[i], fn);
    } else {
      visit_impl(node.child(i), id, ev, fn);
    }
    id = id.parent();
  }
}

std::optional<NodeId> first_empty(const Node& node, const NodeId& id,
                                  const Event& ev) {
  if (ev.empty()) return id;
  for (std::uint32_t i = 0; i < node.num_children(); ++i) {
    const Event child_ev = node.is_chance() ? ev & node.events()[i] : ev;
    if (auto bad = first_empty(node.child(i), id.child(i), child_ev)) return bad;
  }
  return std::nullopt;
}

Node prune_impl(const Node& node, const Event& ev) {
  switch (node.kind()) {
    case NodeKind::kLeaf:
      return node;
    case NodeKind::kDecision: {
      std::vector<Node> kids;
      for (const Node& c : node.children()) kids.push_back(prune_impl(c, ev));
      return decision(std::move(kids));
    }
    case NodeKind::kChance: {
      std::vector<ChanceBranch> kept;
      std::uint64_t dropped = 0;
      for (std::size_t i = 0; i < node.num_children(); ++i) {
        const Event& e = node.events()[i];
        const Event child_ev = ev & e;
        if (child_ev.empty()) {
          dropped |= e.bits();
        } else {
          kept.push_back({e, prune_impl(node.child(i), child_ev)});
        }
      }
      // ev is non-empty here, so at least one branch survives.
      kept.front().event = kept.front().event.space().from_bits(
          kept.front().event.bits() | dropped);
      return chance(std::move(kept));
    }
  }
  return node;
}

}  // namespace

DecisionTree::DecisionTree(Node root, Event root_event)
    : root_(std::make_shared<const Node>(std::move(root))),
      root_event_(std::move(root_event)) {
  check_spaces(*root_, root_event_.space());
}

DecisionTree::DecisionTree(std::shared_ptr<const Node> root, Event root_event)
    : root_(std::move(root)), root_event_(std::move(root_event)) {}

const Node* DecisionTree::find(const NodeId& id) const {
  const Node* node = root_.get();
  for (std::uint32_t i : id.path()) {
    if (i >= node->num_children()) return nullptr;
    node = &node->child(i);
  }
  return node;
}

const Node& DecisionTree::at(const NodeId& id) const {
  const Node* node = find(id);
  if (node == nullptr) {
    throw Error(ErrorKind::kUnknownNode, "no node at " + id.to_string());
  }
  return *node;
}

Event DecisionTree::event_at(const NodeId& id) const {
  const Node* node = root_.get();
  Event ev = root_event_;
  for (std::uint32_t i : id.path()) {
    if (i >= node->num_children()) {
      throw Error(ErrorKind::kUnknownNode, "no node at " + id.to_string());
    }
    if (node->is_chance()) ev = ev & node->events()[i];
    node = &node->child(i);
  }
  return ev;
}

void DecisionTree::visit(
    const std::function<void(const NodeId&, const Node&, const Event&)>& fn)
    const {
  NodeId id;
  visit_impl(*root_, id, root_event_, fn);
}

bool operator==(const DecisionTree& a, const DecisionTree& b) {
  return a.root_event_ == b.root_event_ &&
         canonical(*a.root_) == canonical(*b.root_);
}

ValidationResult validate(const DecisionTree& tree) {
  if (auto bad = first_empty(tree.root(), NodeId::root(), tree.root_event())) {
    return {false, std::move(bad)};
  }
  return {};
}

void require_consistent(const DecisionTree& tree) {
  ValidationResult v = validate(tree);
  if (!v) {
    throw Error(ErrorKind::kEmptySubtreeEvent,
                "empty conditioning event at node " + v.offending->to_string());
  }
}

DecisionTree subtree_at(const DecisionTree& tree, const NodeId& node) {
  const Node& target = tree.at(node);
  return DecisionTree(std::shared_ptr<const Node>(tree.root_, &target),
                      tree.event_at(node));
}

DecisionTree prune_inconsistent(const DecisionTree& tree) {
  if (tree.root_event().empty()) {
    throw Error(ErrorKind::kEmptySubtreeEvent, "root event is empty");
  }
  return DecisionTree(prune_impl(tree.root(), tree.root_event()),
                      tree.root_event());
}

DecisionTree tree_for_gamble_set(const GambleSet& set, const Event& a) {
  if (set.empty()) {
    throw Error(ErrorKind::kEmptyInputSet, "cannot build a tree for an empty set");
  }
  const PossibilitySpace& space = a.space();
  std::vector<Node> options;
  for (const Gamble& x : set) {
    std::vector<ChanceBranch> branches;
    for (RewardId r : x.attained()) {
      branches.push_back({space.from_bits(x.level_set_bits(r)), leaf(r)});
    }
    options.push_back(chance(std::move(branches)));
  }
  return DecisionTree(decision(std::move(options)), a);
}

}  // namespace choicetree
