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

#ifndef CHOICETREE_CHOICE_H_
#define CHOICETREE_CHOICE_H_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "choicetree/gamble.h"
#include "choicetree/rational.h"
#include "choicetree/space.h"

namespace choicetree {

// Probability of each state, indexed like the possibility space.
using MassFunction = std::vector<Rational>;

// Utilities plus whatever beliefs the rules need. Every mass function must
// be strictly positive and sum to one, so every conditional is defined.
class ChoiceContext {
 public:
  explicit ChoiceContext(RewardTable utilities,
                         std::optional<MassFunction> probability = std::nullopt,
                         std::optional<std::vector<MassFunction>> credal =
                             std::nullopt);

  const RewardTable& utilities() const { return utilities_; }
  const std::optional<MassFunction>& probability() const { return probability_; }
  const std::optional<std::vector<MassFunction>>& credal() const {
    return credal_;
  }

 private:
  RewardTable utilities_;
  std::optional<MassFunction> probability_;
  std::optional<std::vector<MassFunction>> credal_;
};

// Throws kInvalidArgument unless `p` is strictly positive and sums to one.
void require_mass_function(const MassFunction& p);

// Σ_{ω∈A} p(ω) u(X(ω)) / p(A), exact.
Rational conditional_expectation(const MassFunction& p, const Gamble& gamble,
                                 const Event& a, const RewardTable& utilities);

// A conditional choice function opt(·|A). select() validates its inputs and
// the non-empty-subset contract around the rule-specific choose().
class ChoiceRule {
 public:
  virtual ~ChoiceRule() = default;

  virtual std::string name() const = 0;

  // Throws kEmptyInputSet, kEmptyEvent, kDomainMismatch or kInconsistentSet.
  GambleSet select(const GambleSet& set, const Event& a) const;

 protected:
  // Receives a validated, non-empty, A-consistent set.
  virtual GambleSet choose(const GambleSet& set, const Event& a) const = 0;
};

using RulePtr = std::shared_ptr<const ChoiceRule>;

enum class RuleKind {
  kEuMax,
  kPointwiseDominance,
  kMaximality,
  kEAdmissibility,
  kGammaMaximin,
  kIntervalDominance,
};

std::string_view to_string(RuleKind kind);
// Accepts the names printed by to_string ("eu_max", "maximality", ...).
std::optional<RuleKind> parse_rule_kind(std::string_view name);
const std::vector<RuleKind>& all_rule_kinds();
bool needs_probability(RuleKind kind);
bool needs_credal(RuleKind kind);

// Throws kMissingContext when the context lacks what the rule needs.
RulePtr make_rule(RuleKind kind, const ChoiceContext& context);

// Wraps an arbitrary selector; select() still enforces the contract.
using SelectFn = std::function<GambleSet(const GambleSet&, const Event&)>;
RulePtr make_function_rule(std::string name, SelectFn fn);

}  // namespace choicetree

#endif  // CHOICETREE_CHOICE_H_
