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

#ifndef CHOICETREE_GENERATORS_H_
#define CHOICETREE_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "choicetree/choice.h"
#include "choicetree/laws.h"
#include "choicetree/normal_form.h"
#include "choicetree/tree.h"

namespace choicetree {

struct GenConfig {
  std::size_t max_depth = 3;
  std::size_t max_children = 3;
  std::size_t min_states = 2;
  std::size_t max_states = 4;
  std::size_t reward_pool = 5;  // distinct rewards per instance
  // Utilities are p/q with q <= max_denominator and value in [min, max].
  std::int64_t utility_min = -10;
  std::int64_t utility_max = 10;
  std::int64_t max_denominator = 16;
  double decision_ratio = 0.5;  // share of internal nodes that are decisions
  std::size_t nfd_ceiling = 512;
  std::size_t credal_size = 2;
  std::size_t max_set_size = 5;  // gambles per generated set
  bool random_root_event = true;
  std::size_t retries = 200;

  // Throws kInvalidArgument on a bound below one or a ceiling above the cap.
  void validate() const;
};

// The tree, its rewards, and a probability plus credal list on its space.
struct GeneratedTree {
  DecisionTree tree;
  ChoiceContext context;
};

// A consistent tree whose nfd stays under config.nfd_ceiling. Throws
// kGenerationRetryExhausted when that cannot be met within config.retries.
GeneratedTree random_consistent_tree(const GenConfig& config, std::uint64_t seed);

// A gamble-preserving rewrite chain of `steps` random moves: permuting
// decision children or chance branches, flattening a nested decision, and
// adding or removing a unary decision.
DecisionTree equivalent_rewrite(const DecisionTree& tree, std::uint64_t seed,
                                std::size_t steps = 1);

// An instance that meets the property's hypotheses. Instances for different
// properties drawn with the same seed share space, context, event A and the
// underlying gamble pool. `forced_a` pins A (as a bit mask); properties that
// need a proper A reject A = Ω with kMalformedInstance.
PropertyInstance random_gamble_instance(
    PropertyId id, const GenConfig& config, std::uint64_t seed,
    std::optional<std::uint64_t> forced_a = std::nullopt);

// Strictly positive mass function with small integer weights.
MassFunction random_mass_function(std::size_t n, std::mt19937_64& rng);

// A random partition of Ω into `blocks` blocks, each meeting `history`.
// Requires 1 <= blocks <= |history|.
std::vector<Event> random_partition(const Event& history, std::size_t blocks,
                                    std::mt19937_64& rng);

}  // namespace choicetree

#endif  // CHOICETREE_GENERATORS_H_
