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

#include "choicetree/generators.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <utility>

#include "choicetree/error.h"

namespace choicetree {

void GenConfig::validate() const {
  auto positive = [](std::size_t v, const char* what) {
    if (v < 1) {
      throw Error(ErrorKind::kInvalidArgument,
                  std::string("generator bound ") + what + " must be >= 1");
    }
  };
  positive(max_children, "max_children");
  positive(min_states, "min_states");
  positive(max_states, "max_states");
  positive(reward_pool, "reward_pool");
  positive(nfd_ceiling, "nfd_ceiling");
  positive(credal_size, "credal_size");
  positive(max_set_size, "max_set_size");
  positive(retries, "retries");
  if (min_states > max_states || max_states > kMaxStates) {
    throw Error(ErrorKind::kInvalidArgument, "state count range is invalid");
  }
  if (max_denominator < 1 || utility_min > utility_max) {
    throw Error(ErrorKind::kInvalidArgument, "utility range is invalid");
  }
  if (nfd_ceiling > kDefaultEnumerationCap) {
    throw Error(ErrorKind::kInvalidArgument,
                "nfd ceiling exceeds the enumeration cap");
  }
  if (decision_ratio < 0.0 || decision_ratio > 1.0) {
    throw Error(ErrorKind::kInvalidArgument, "decision_ratio must be in [0, 1]");
  }
}

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

Rational random_utility(const GenConfig& c, std::mt19937_64& rng) {
  const std::int64_t den =
      std::uniform_int_distribution<std::int64_t>(1, c.max_denominator)(rng);
  const std::int64_t num = std::uniform_int_distribution<std::int64_t>(
      c.utility_min * den, c.utility_max * den)(rng);
  Rational q(static_cast<long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

PossibilitySpace make_space(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("w" + std::to_string(i));
  return PossibilitySpace(std::move(labels));
}

RewardTable make_rewards(const GenConfig& c, std::mt19937_64& rng) {
  RewardTable rewards;
  for (std::size_t i = 0; i < c.reward_pool; ++i) {
    rewards.add("r" + std::to_string(i), random_utility(c, rng));
  }
  return rewards;
}

ChoiceContext make_context(const GenConfig& c, RewardTable rewards,
                           std::size_t n, std::mt19937_64& rng) {
  MassFunction p = random_mass_function(n, rng);
  std::vector<MassFunction> credal;
  for (std::size_t k = 0; k < c.credal_size; ++k) {
    credal.push_back(random_mass_function(n, rng));
  }
  return ChoiceContext(std::move(rewards), std::move(p), std::move(credal));
}

Event random_nonempty_subset(const PossibilitySpace& space, std::mt19937_64& rng) {
  const std::size_t n = space.size();
  std::uint64_t bits = 0;
  while (bits == 0) {
    for (std::size_t s = 0; s < n; ++s) {
      if (coin(rng, 0.5)) bits |= std::uint64_t{1} << s;
    }
  }
  return space.from_bits(bits);
}

std::size_t pick_state(const Event& e, std::mt19937_64& rng) {
  const std::vector<std::size_t> states = e.states();
  return states[uniform(rng, 0, states.size() - 1)];
}

// Node builder for random_consistent_tree.
class TreeBuilder {
 public:
  TreeBuilder(const GenConfig& c, std::mt19937_64& rng, std::size_t n_rewards)
      : c_(c), rng_(rng), n_rewards_(n_rewards) {}

  Node build(std::size_t depth, const Event& history) {
    const bool at_root = depth == 0;
    if (depth >= c_.max_depth || (!at_root && coin(rng_, 0.3))) {
      return leaf(RewardId{static_cast<std::uint32_t>(uniform(rng_, 0, n_rewards_ - 1))});
    }
    const std::size_t max_blocks = std::min(c_.max_children, history.count());
    const bool as_decision = max_blocks < 2 || coin(rng_, c_.decision_ratio);
    if (as_decision) {
      std::size_t k = c_.max_children < 2 || coin(rng_, 0.1)
                          ? 1
                          : uniform(rng_, 2, c_.max_children);
      std::vector<Node> kids;
      for (std::size_t i = 0; i < k; ++i) kids.push_back(build(depth + 1, history));
      return decision(std::move(kids));
    }
    const std::size_t k = uniform(rng_, 2, max_blocks);
    std::vector<ChanceBranch> branches;
    for (Event& e : random_partition(history, k, rng_)) {
      Node child = build(depth + 1, history & e);
      branches.push_back({std::move(e), std::move(child)});
    }
    return chance(std::move(branches));
  }

 private:
  const GenConfig& c_;
  std::mt19937_64& rng_;
  std::size_t n_rewards_;
};

// Values on `core` drawn from the reward pool, values on `agree` minus core
// and everywhere else drawn from the core's own values, so every member is
// core-consistent and members sharing a pattern agree on `agree`.
GambleSet make_pool(const Event& core, const Event& agree, std::size_t count,
                    std::size_t n_rewards, std::mt19937_64& rng) {
  const std::size_t n = core.space().size();
  // Mostly distinct on `core`; sometimes several gambles share a pattern and
  // differ only outside `agree`.
  const std::size_t patterns = coin(rng, 0.75) ? count : uniform(rng, 1, count);
  std::vector<std::vector<RewardId>> cores;
  for (std::size_t k = 0; k < patterns; ++k) {
    std::vector<RewardId> v(n);
    std::vector<RewardId> used;
    for (std::size_t s : core.states()) {
      v[s] = RewardId{static_cast<std::uint32_t>(uniform(rng, 0, n_rewards - 1))};
      used.push_back(v[s]);
    }
    for (std::size_t s : (agree - core).states()) {
      v[s] = used[uniform(rng, 0, used.size() - 1)];
    }
    cores.push_back(std::move(v));
  }
  std::vector<Gamble> out;
  const Event outside = agree.complement();
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<RewardId> v = cores[uniform(rng, 0, cores.size() - 1)];
    std::vector<RewardId> used;
    for (std::size_t s : core.states()) used.push_back(v[s]);
    for (std::size_t s : outside.states()) {
      v[s] = used[uniform(rng, 0, used.size() - 1)];
    }
    out.emplace_back(std::move(v));
  }
  return GambleSet(std::move(out));
}

GambleSet random_subset(const GambleSet& set, std::mt19937_64& rng) {
  std::vector<Gamble> out;
  for (const Gamble& g : set) {
    if (coin(rng, 0.5)) out.push_back(g);
  }
  if (out.empty()) out.push_back(set[uniform(rng, 0, set.size() - 1)]);
  // Keep the subset proper whenever the set allows it.
  if (out.size() == set.size() && out.size() > 1) {
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(uniform(rng, 0, out.size() - 1)));
  }
  return GambleSet(std::move(out));
}

// Node rebuilding along a path, used by the rewrite moves.
Node rebuild(const Node& node, std::span<const std::uint32_t> path,
             const std::function<Node(const Node&)>& fn) {
  if (path.empty()) return fn(node);
  const std::uint32_t i = path.front();
  if (node.is_decision()) {
    std::vector<Node> kids = node.children();
    kids[i] = rebuild(kids[i], path.subspan(1), fn);
    return decision(std::move(kids));
  }
  std::vector<ChanceBranch> branches;
  for (std::size_t k = 0; k < node.num_children(); ++k) {
    branches.push_back({node.events()[k],
                        k == i ? rebuild(node.child(k), path.subspan(1), fn)
                               : node.child(k)});
  }
  return chance(std::move(branches));
}

enum class Move { kPermuteDecision, kPermuteChance, kFlatten, kGroup, kAddUnary,
                  kRemoveUnary };

}  // namespace

MassFunction random_mass_function(std::size_t n, std::mt19937_64& rng) {
  std::vector<long> w(n);
  long total = 0;
  for (long& x : w) {
    // Squared weights spread the distributions of a credal list apart.
    x = static_cast<long>(uniform(rng, 1, 9));
    x *= x;
    total += x;
  }
  MassFunction p;
  for (long x : w) {
    Rational q(x, static_cast<unsigned long>(total));
    q.canonicalize();
    p.push_back(q);
  }
  return p;
}

std::vector<Event> random_partition(const Event& history, std::size_t blocks,
                                    std::mt19937_64& rng) {
  std::vector<std::size_t> hist = history.states();
  if (blocks < 1 || blocks > hist.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "cannot split the history into that many blocks");
  }
  std::shuffle(hist.begin(), hist.end(), rng);
  const PossibilitySpace& space = history.space();
  std::vector<std::uint64_t> bits(blocks, 0);
  for (std::size_t k = 0; k < blocks; ++k) bits[k] |= std::uint64_t{1} << hist[k];
  for (std::size_t s = 0; s < space.size(); ++s) {
    const bool seeded = std::find(hist.begin(), hist.begin() +
                                      static_cast<std::ptrdiff_t>(blocks), s) !=
                        hist.begin() + static_cast<std::ptrdiff_t>(blocks);
    if (!seeded) bits[uniform(rng, 0, blocks - 1)] |= std::uint64_t{1} << s;
  }
  std::vector<Event> out;
  for (std::uint64_t b : bits) out.push_back(space.from_bits(b));
  return out;
}

GeneratedTree random_consistent_tree(const GenConfig& config, std::uint64_t seed) {
  config.validate();
  std::mt19937_64 rng(seed);
  const std::size_t n = uniform(rng, config.min_states, config.max_states);
  const PossibilitySpace space = make_space(n);
  RewardTable rewards = make_rewards(config, rng);
  ChoiceContext context = make_context(config, rewards, n, rng);
  for (std::size_t attempt = 0; attempt < config.retries; ++attempt) {
    Event root_event = space.all();
    if (config.random_root_event && coin(rng, 0.5)) {
      root_event = random_nonempty_subset(space, rng);
    }
    TreeBuilder builder(config, rng, rewards.size());
    DecisionTree tree(builder.build(0, root_event), root_event);
    if (count_normal_form_decisions(tree) <= config.nfd_ceiling) {
      return GeneratedTree{std::move(tree), std::move(context)};
    }
  }
  throw Error(ErrorKind::kGenerationRetryExhausted,
              "no tree under the nfd ceiling within " +
                  std::to_string(config.retries) + " attempts");
}

DecisionTree equivalent_rewrite(const DecisionTree& tree, std::uint64_t seed,
                                std::size_t steps) {
  std::mt19937_64 rng(seed);
  Node root = tree.root();
  for (std::size_t step = 0; step < steps; ++step) {
    std::vector<std::pair<NodeId, Move>> moves;
    DecisionTree current(root, tree.root_event());
    current.visit([&](const NodeId& id, const Node& node, const Event&) {
      moves.push_back({id, Move::kAddUnary});
      if (node.is_decision()) {
        if (node.num_children() >= 2) {
          moves.push_back({id, Move::kPermuteDecision});
          moves.push_back({id, Move::kGroup});
        }
        if (node.num_children() == 1) moves.push_back({id, Move::kRemoveUnary});
        for (const Node& c : node.children()) {
          if (c.is_decision()) {
            moves.push_back({id, Move::kFlatten});
            break;
          }
        }
      }
      if (node.is_chance() && node.num_children() >= 2) {
        moves.push_back({id, Move::kPermuteChance});
      }
    });
    const auto [where, move] = moves[uniform(rng, 0, moves.size() - 1)];
    auto fn = [&, move = move](const Node& node) -> Node {
      switch (move) {
        case Move::kAddUnary:
          return decision({node});
        case Move::kRemoveUnary:
          return node.child(0);
        case Move::kPermuteDecision: {
          std::vector<Node> kids = node.children();
          std::shuffle(kids.begin(), kids.end(), rng);
          return decision(std::move(kids));
        }
        case Move::kPermuteChance: {
          std::vector<ChanceBranch> branches;
          for (std::size_t k = 0; k < node.num_children(); ++k) {
            branches.push_back({node.events()[k], node.child(k)});
          }
          std::shuffle(branches.begin(), branches.end(), rng);
          return chance(std::move(branches));
        }
        case Move::kFlatten: {
          std::vector<std::size_t> nested;
          for (std::size_t k = 0; k < node.num_children(); ++k) {
            if (node.child(k).is_decision()) nested.push_back(k);
          }
          const std::size_t pick = nested[uniform(rng, 0, nested.size() - 1)];
          std::vector<Node> kids;
          for (std::size_t k = 0; k < node.num_children(); ++k) {
            if (k == pick) {
              for (const Node& g : node.child(k).children()) kids.push_back(g);
            } else {
              kids.push_back(node.child(k));
            }
          }
          return decision(std::move(kids));
        }
        case Move::kGroup: {
          const std::size_t m = node.num_children();
          const std::size_t lo = uniform(rng, 0, m - 2);
          const std::size_t hi = uniform(rng, lo + 2, m);
          std::vector<Node> kids(node.children().begin(),
                                 node.children().begin() +
                                     static_cast<std::ptrdiff_t>(lo));
          kids.push_back(decision(std::vector<Node>(
              node.children().begin() + static_cast<std::ptrdiff_t>(lo),
              node.children().begin() + static_cast<std::ptrdiff_t>(hi))));
          kids.insert(kids.end(),
                      node.children().begin() + static_cast<std::ptrdiff_t>(hi),
                      node.children().end());
          return decision(std::move(kids));
        }
      }
      return node;
    };
    root = rebuild(root, where.path(), fn);
  }
  return DecisionTree(std::move(root), tree.root_event());
}

PropertyInstance random_gamble_instance(PropertyId id, const GenConfig& config,
                                        std::uint64_t seed,
                                        std::optional<std::uint64_t> forced_a) {
  config.validate();
  std::mt19937_64 rng(seed);
  const std::size_t n =
      uniform(rng, std::max<std::size_t>(2, config.min_states),
              std::max<std::size_t>(2, config.max_states));
  const PossibilitySpace space = make_space(n);
  RewardTable rewards = make_rewards(config, rng);
  const std::size_t r = rewards.size();
  PropertyInstance in(make_context(config, std::move(rewards), n, rng), space);

  if (forced_a) {
    if (*forced_a == 0 || (*forced_a & ~space.all().bits()) != 0) {
      throw Error(ErrorKind::kMalformedInstance,
                  "requested A is empty or leaves the space");
    }
    in.a = space.from_bits(*forced_a);
  } else {
    in.a = coin(rng, 0.5) ? space.all() : random_nonempty_subset(space, rng);
  }
  in.b = random_nonempty_subset(space, rng);

  // Shared by every property that draws from the A-consistent pool.
  const std::size_t pool_size =
      uniform(rng, std::min<std::size_t>(3, config.max_set_size),
              std::max<std::size_t>(2, config.max_set_size));
  const GambleSet pool = make_pool(in.a, in.a, pool_size, r, rng);
  const GambleSet x = pool;
  const GambleSet y = random_subset(x, rng);
  const GambleSet rest = set_difference(x, y);

  // Property-specific draws come from a second stream so the shared part
  // above is identical across properties.
  std::mt19937_64 extra(seed ^ 0x5deece66dULL);
  switch (id) {
    case PropertyId::kP1Conditioning:
      in.sets = {x};
      break;
    case PropertyId::kP2Intersection:
    case PropertyId::kP8Insensitivity:
    case PropertyId::kP9Preservation:
      in.sets = {x, y};
      break;
    case PropertyId::kP4StrongPathIndependence:
    case PropertyId::kP5VeryStrongPathIndependence:
    case PropertyId::kP11PathIndependence:
      in.sets = {y};
      if (!rest.empty()) in.sets.push_back(rest);
      break;
    case PropertyId::kP6TotalPreorder:
      in.sets = {x, y};
      break;
    case PropertyId::kP3Mixture:
    case PropertyId::kP7BackwardConditioning:
    case PropertyId::kP10BackwardMixture: {
      if (in.a.is_full()) {
        if (forced_a) {
          throw Error(ErrorKind::kMalformedInstance,
                      std::string(to_string(id)) +
                          " needs B to meet the complement of A, so A != Omega");
        }
        in.a = in.a - space.singleton(pick_state(in.a, extra));
      }
      const Event not_a = in.a.complement();
      in.b = in.b | space.singleton(pick_state(in.a, extra)) |
             space.singleton(pick_state(not_a, extra));
      const Event ab = in.a & in.b;
      const Event nab = not_a & in.b;
      const std::size_t count =
          uniform(extra, 2, std::max<std::size_t>(2, config.max_set_size));
      in.sets = {make_pool(ab, in.a, count, r, extra)};
      const std::size_t z_count =
          id == PropertyId::kP7BackwardConditioning ? uniform(extra, 1, 3) : 1;
      in.z = make_pool(nab, nab, z_count, r, extra);
      if (id != PropertyId::kP7BackwardConditioning && in.z.size() > 1) {
        in.z = GambleSet{in.z[0]};
      }
      break;
    }
    case PropertyId::kLSetsumFactorization: {
      const std::size_t k = uniform(extra, 2, std::min<std::size_t>(3, n));
      in.partition = random_partition(space.all(), k, extra);
      Event b = space.none();
      for (const Event& block : in.partition) {
        b = b | space.singleton(pick_state(block, extra));
      }
      in.b = b | in.b;
      in.sets.clear();
      for (const Event& block : in.partition) {
        const Event ev = block & in.b;
        in.sets.push_back(make_pool(ev, ev, uniform(extra, 1, 3), r, extra));
      }
      break;
    }
  }
  try {
    require_preconditions(id, in);
  } catch (const Error& e) {
    throw Error(ErrorKind::kGenerationRetryExhausted,
                std::string("generated instance rejected: ") + e.what());
  }
  return in;
}

}  // namespace choicetree
