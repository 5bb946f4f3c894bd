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

#ifndef CHOICETREE_TESTS_SUPPORT_RANDOM_TREES_H_
#define CHOICETREE_TESTS_SUPPORT_RANDOM_TREES_H_

// Test-side tree generator, independent of the library's generators. Trees
// are consistent by construction: every chance node splits the event that
// reaches it, and the remaining states are spread over the same blocks.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "choicetree/choice.h"
#include "choicetree/gamble.h"
#include "choicetree/space.h"
#include "choicetree/tree.h"

namespace choicetree::testgen {

struct Sample {
  DecisionTree tree;
  RewardTable rewards;
  MassFunction probability;
};

class TreeSampler {
 public:
  explicit TreeSampler(std::uint64_t seed) : rng_(seed) {}

  std::size_t pick(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  Sample sample(std::size_t max_states = 4, std::size_t max_depth = 3) {
    const std::size_t n = pick(1, max_states);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
    PossibilitySpace space(labels);
    RewardTable rewards;
    for (int i = 0; i < 4; ++i) {
      const Rational num(static_cast<long>(pick(0, 12)) - 6);
      const Rational den(static_cast<long>(pick(1, 3)));
      rewards.add("v" + std::to_string(i), num / den);
    }
    MassFunction p;
    Rational total = 0;
    std::vector<Rational> w;
    for (std::size_t i = 0; i < n; ++i) {
      w.emplace_back(static_cast<long>(pick(1, 5)));
      total += w.back();
    }
    for (const Rational& x : w) p.push_back(x / total);
    std::uint64_t bits = 0;
    while (bits == 0) bits = pick(1, (std::uint64_t{1} << n) - 1);
    if (pick(0, 1) == 0) bits = (std::uint64_t{1} << n) - 1;
    const Event root_event = space.from_bits(bits);
    Node root = node(root_event, 0, max_depth, rewards.size());
    return Sample{DecisionTree(std::move(root), root_event), rewards, p};
  }

 private:
  Node node(const Event& ev, std::size_t depth, std::size_t max_depth,
            std::size_t n_rewards) {
    const std::size_t roll = pick(0, 9);
    if (depth == max_depth || (depth > 0 && roll < 3)) {
      return leaf(RewardId{static_cast<std::uint32_t>(pick(0, n_rewards - 1))});
    }
    const std::vector<std::size_t> inside = ev.states();
    if (roll < 7 || inside.size() < 2) {
      std::vector<Node> kids;
      const std::size_t m = pick(1, 3);
      for (std::size_t i = 0; i < m; ++i) {
        kids.push_back(node(ev, depth + 1, max_depth, n_rewards));
      }
      return decision(std::move(kids));
    }
    const std::size_t blocks = pick(2, std::min<std::size_t>(3, inside.size()));
    std::vector<std::uint64_t> masks(blocks, 0);
    // Each block gets one reachable state, then everything else goes anywhere.
    std::vector<std::size_t> order = inside;
    std::shuffle(order.begin(), order.end(), rng_);
    for (std::size_t b = 0; b < blocks; ++b) masks[b] |= std::uint64_t{1} << order[b];
    const PossibilitySpace& space = ev.space();
    for (std::size_t s = 0; s < space.size(); ++s) {
      bool placed = false;
      for (std::uint64_t m : masks) placed = placed || ((m >> s) & 1U) != 0;
      if (!placed) masks[pick(0, blocks - 1)] |= std::uint64_t{1} << s;
    }
    std::vector<ChanceBranch> branches;
    for (std::uint64_t m : masks) {
      const Event e = space.from_bits(m);
      branches.push_back({e, node(ev & e, depth + 1, max_depth, n_rewards)});
    }
    return chance(std::move(branches));
  }

  std::mt19937_64 rng_;
};

}  // namespace choicetree::testgen

#endif  // CHOICETREE_TESTS_SUPPORT_RANDOM_TREES_H_
