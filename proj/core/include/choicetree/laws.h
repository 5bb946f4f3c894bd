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

#ifndef CHOICETREE_LAWS_H_
#define CHOICETREE_LAWS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "choicetree/choice.h"
#include "choicetree/normal_form.h"
#include "choicetree/solvers.h"
#include "choicetree/space.h"

namespace choicetree {

enum class PropertyId {
  kP1Conditioning,
  kP2Intersection,
  kP3Mixture,
  kP4StrongPathIndependence,
  kP5VeryStrongPathIndependence,
  kP6TotalPreorder,
  kP7BackwardConditioning,
  kP8Insensitivity,
  kP9Preservation,
  kP10BackwardMixture,
  kP11PathIndependence,
  kLSetsumFactorization,
};

// Short names "P1" .. "P11" and "L".
std::string_view to_string(PropertyId id);
// Accepts the short names and the long ones ("P2_intersection", ...).
std::optional<PropertyId> parse_property_id(std::string_view name);
std::string_view long_name(PropertyId id);
const std::vector<PropertyId>& all_property_ids();

// One instance of a property's hypotheses. Which fields matter depends on
// the property:
//   P1            sets = {X}, a
//   P2, P8, P9    sets = {X, Y} with Y ⊆ X, a
//   P3, P10       sets = {X}, z = {Z}, a, b
//   P7            sets = {X}, z = the set Z, a, b
//   P4, P5, P11   sets = X_1 .. X_n, a
//   P6            sets = the family whose selections must be rationalised, a
//   L             sets = X_1 .. X_n, partition = A_1 .. A_n, b
struct PropertyInstance {
  explicit PropertyInstance(ChoiceContext context_in, PossibilitySpace space);

  ChoiceContext context;
  Event a;
  Event b;
  std::vector<Event> partition;
  std::vector<GambleSet> sets;
  GambleSet z;

  const PossibilitySpace& space() const { return a.space(); }
  std::size_t gamble_count() const;  // distinct gambles over sets and z
  std::string describe() const;
};

// Throws kMalformedInstance when the instance does not meet the property's
// consistency and non-emptiness hypotheses.
void require_preconditions(PropertyId id, const PropertyInstance& instance);

struct InstanceVerdict {
  bool holds = true;
  std::string detail;  // which equality or inclusion failed, with both sides
  std::optional<GambleSet> expected;
  std::optional<GambleSet> actual;

  explicit operator bool() const { return holds; }
};

// Evaluates the property literally on one instance using rule.select.
// P8 is checked both on the given Y and on Y ∪ opt(X|A), the smallest
// superset that meets its premise.
InstanceVerdict check_property_instance(PropertyId id, const ChoiceRule& rule,
                                        const PropertyInstance& instance);

// Rules are rebuilt for every instance because each one has its own space.
using RuleFactory = std::function<RulePtr(const ChoiceContext&)>;
RuleFactory rule_factory(RuleKind kind);

struct GenConfig;

struct SamplingConfig {
  std::size_t budget = 1000;
  bool shrink = true;
};

struct LawReport {
  PropertyId property = PropertyId::kP1Conditioning;
  std::string rule;
  std::size_t instances_checked = 0;
  bool violated = false;
  std::optional<PropertyInstance> witness;
  std::optional<InstanceVerdict> witness_verdict;
  std::size_t shrink_steps = 0;

  bool corroborated() const { return !violated; }
};

// Seed for the k-th instance of a run, shared by every property so verdicts
// refer to one corpus.
std::uint64_t instance_seed(std::uint64_t seed, std::size_t index);

// Samples instances until the first violation or until the budget runs out,
// then shrinks the witness greedily.
LawReport falsify_property(PropertyId id, const RuleFactory& factory,
                           const GenConfig& gen, const SamplingConfig& sampling,
                           std::uint64_t seed);

// Removes gambles, then states, while the violation persists.
PropertyInstance shrink_instance(PropertyId id, const RuleFactory& factory,
                                 PropertyInstance instance,
                                 std::size_t* steps = nullptr);

struct NodeVerdict {
  NodeId node;
  NormalFormSolution expected;  // norm_opt(st_N(T))
  NormalFormSolution actual;    // st_N(norm_opt(T))
  GambleSet expected_gambles;
  GambleSet actual_gambles;
};

struct PerfectnessReport {
  bool weak = false;
  std::size_t nodes_checked = 0;
  SolveReport root;
  std::vector<NodeVerdict> violations;

  bool perfect() const { return violations.empty(); }
};

// For every node in some member of norm_opt(T): st_N(norm_opt(T)) must equal
// norm_opt(st_N(T)).
PerfectnessReport check_subtree_perfectness(
    const DecisionTree& tree, const ChoiceRule& rule,
    std::size_t cap = kDefaultEnumerationCap);

// Same traversal, inclusion only.
PerfectnessReport check_weak_subtree_perfectness(
    const DecisionTree& tree, const ChoiceRule& rule,
    std::size_t cap = kDefaultEnumerationCap);

}  // namespace choicetree

#endif  // CHOICETREE_LAWS_H_
