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

#include "choicetree/choice.h"

#include <algorithm>
#include <array>
#include <utility>

#include "choicetree/error.h"

namespace choicetree {

void require_mass_function(const MassFunction& p) {
  if (p.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "mass function has no states");
  }
  Rational total = 0;
  for (const Rational& m : p) {
    if (sgn(m) <= 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "every state needs a strictly positive mass");
    }
    total += m;
  }
  if (total != 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "masses sum to " + format_rational(total) + ", not 1");
  }
}

ChoiceContext::ChoiceContext(RewardTable utilities,
                             std::optional<MassFunction> probability,
                             std::optional<std::vector<MassFunction>> credal)
    : utilities_(std::move(utilities)),
      probability_(std::move(probability)),
      credal_(std::move(credal)) {
  if (probability_) require_mass_function(*probability_);
  if (credal_) {
    if (credal_->empty()) {
      throw Error(ErrorKind::kInvalidArgument, "credal list is empty");
    }
    for (const MassFunction& p : *credal_) {
      require_mass_function(p);
      if (p.size() != credal_->front().size()) {
        throw Error(ErrorKind::kDomainMismatch,
                    "credal members disagree on the number of states");
      }
    }
  }
}

Rational conditional_expectation(const MassFunction& p, const Gamble& gamble,
                                 const Event& a, const RewardTable& utilities) {
  Rational num = 0;
  Rational den = 0;
  for (std::size_t s : a.states()) {
    num += p.at(s) * utilities.utility(gamble[s]);
    den += p.at(s);
  }
  if (sgn(den) == 0) {
    throw Error(ErrorKind::kEmptyEvent, "conditioning on a null event");
  }
  Rational out = num / den;
  out.canonicalize();
  return out;
}

GambleSet ChoiceRule::select(const GambleSet& set, const Event& a) const {
  if (set.empty()) {
    throw Error(ErrorKind::kEmptyInputSet, name() + ": empty gamble set");
  }
  if (a.empty()) {
    throw Error(ErrorKind::kEmptyEvent, name() + ": empty conditioning event");
  }
  for (const Gamble& g : set) {
    if (g.size() != a.space().size()) {
      throw Error(ErrorKind::kDomainMismatch,
                  name() + ": gamble length differs from the space size");
    }
  }
  if (!check_a_consistency(set, a)) {
    throw Error(ErrorKind::kInconsistentSet,
                name() + ": gamble set is not " + a.to_string() + "-consistent");
  }
  GambleSet out = choose(set, a);
  if (out.empty()) {
    throw Error(ErrorKind::kEmptySolution, name() + " selected nothing");
  }
  if (!out.is_subset_of(set)) {
    throw Error(ErrorKind::kInvalidArgument,
                name() + " selected gambles outside its input");
  }
  return out;
}

namespace {

GambleSet keep_where(const GambleSet& set, const std::vector<bool>& keep) {
  std::vector<Gamble> out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (keep[i]) out.push_back(set[i]);
  }
  return GambleSet(std::move(out));
}

void require_states(const MassFunction& p, const Event& a,
                    const std::string& rule) {
  if (p.size() != a.space().size()) {
    throw Error(ErrorKind::kDomainMismatch,
                rule + ": mass function and space differ in size");
  }
}

// exps[k][i]: expectation of member i under the k-th mass function.
std::vector<std::vector<Rational>> expectations(
    const std::vector<MassFunction>& masses, const GambleSet& set,
    const Event& a, const RewardTable& u, const std::string& rule) {
  std::vector<std::vector<Rational>> out;
  for (const MassFunction& p : masses) {
    require_states(p, a, rule);
    std::vector<Rational> row;
    row.reserve(set.size());
    for (const Gamble& g : set) row.push_back(conditional_expectation(p, g, a, u));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<bool> argmax(const std::vector<Rational>& values) {
  const Rational best = *std::max_element(values.begin(), values.end());
  std::vector<bool> keep(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) keep[i] = values[i] == best;
  return keep;
}

class EuMax : public ChoiceRule {
 public:
  explicit EuMax(const ChoiceContext& c) : u_(c.utilities()), p_(*c.probability()) {}
  std::string name() const override { return "eu_max"; }

 protected:
  GambleSet choose(const GambleSet& set, const Event& a) const override {
    auto e = expectations({p_}, set, a, u_, name());
    return keep_where(set, argmax(e[0]));
  }

 private:
  RewardTable u_;
  MassFunction p_;
};

class PointwiseDominance : public ChoiceRule {
 public:
  explicit PointwiseDominance(const ChoiceContext& c) : u_(c.utilities()) {}
  std::string name() const override { return "pointwise_dominance"; }

 protected:
  GambleSet choose(const GambleSet& set, const Event& a) const override {
    const std::vector<std::size_t> states = a.states();
    std::vector<std::vector<Rational>> util;
    for (const Gamble& g : set) {
      std::vector<Rational> row;
      for (std::size_t s : states) row.push_back(u_.utility(g[s]));
      util.push_back(std::move(row));
    }
    auto dominates = [&](std::size_t y, std::size_t x) {
      bool strict = false;
      for (std::size_t k = 0; k < states.size(); ++k) {
        if (util[y][k] < util[x][k]) return false;
        if (util[y][k] > util[x][k]) strict = true;
      }
      return strict;
    };
    std::vector<bool> keep(set.size(), true);
    for (std::size_t x = 0; x < set.size(); ++x) {
      for (std::size_t y = 0; y < set.size() && keep[x]; ++y) {
        if (dominates(y, x)) keep[x] = false;
      }
    }
    return keep_where(set, keep);
  }

 private:
  RewardTable u_;
};

class CredalRule : public ChoiceRule {
 public:
  CredalRule(RuleKind kind, const ChoiceContext& c)
      : kind_(kind), u_(c.utilities()), credal_(*c.credal()) {}
  std::string name() const override { return std::string(to_string(kind_)); }

 protected:
  GambleSet choose(const GambleSet& set, const Event& a) const override {
    const auto e = expectations(credal_, set, a, u_, name());
    const std::size_t n = set.size();
    std::vector<bool> keep(n, false);
    switch (kind_) {
      case RuleKind::kMaximality:
        for (std::size_t x = 0; x < n; ++x) {
          keep[x] = true;
          for (std::size_t y = 0; y < n && keep[x]; ++y) {
            bool better_everywhere = true;
            for (const auto& row : e) {
              if (!(row[y] > row[x])) {
                better_everywhere = false;
                break;
              }
            }
            if (better_everywhere) keep[x] = false;
          }
        }
        break;
      case RuleKind::kEAdmissibility:
        for (const auto& row : e) {
          std::vector<bool> best = argmax(row);
          for (std::size_t i = 0; i < n; ++i) keep[i] = keep[i] || best[i];
        }
        break;
      case RuleKind::kGammaMaximin: {
        std::vector<Rational> lower = lower_envelope(e, n);
        keep = argmax(lower);
        break;
      }
      case RuleKind::kIntervalDominance: {
        std::vector<Rational> lower = lower_envelope(e, n);
        std::vector<Rational> upper = upper_envelope(e, n);
        const Rational best_lower = *std::max_element(lower.begin(), lower.end());
        for (std::size_t x = 0; x < n; ++x) keep[x] = !(best_lower > upper[x]);
        break;
      }
      default:
        throw Error(ErrorKind::kInvalidArgument, "not a credal rule");
    }
    return keep_where(set, keep);
  }

 private:
  static std::vector<Rational> lower_envelope(
      const std::vector<std::vector<Rational>>& e, std::size_t n) {
    std::vector<Rational> out = e.front();
    for (const auto& row : e) {
      for (std::size_t i = 0; i < n; ++i) out[i] = std::min(out[i], row[i]);
    }
    return out;
  }
  static std::vector<Rational> upper_envelope(
      const std::vector<std::vector<Rational>>& e, std::size_t n) {
    std::vector<Rational> out = e.front();
    for (const auto& row : e) {
      for (std::size_t i = 0; i < n; ++i) out[i] = std::max(out[i], row[i]);
    }
    return out;
  }

  RuleKind kind_;
  RewardTable u_;
  std::vector<MassFunction> credal_;
};

class FunctionRule : public ChoiceRule {
 public:
  FunctionRule(std::string name, SelectFn fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}
  std::string name() const override { return name_; }

 protected:
  GambleSet choose(const GambleSet& set, const Event& a) const override {
    return fn_(set, a);
  }

 private:
  std::string name_;
  SelectFn fn_;
};

struct RuleName {
  RuleKind kind;
  std::string_view name;
};

constexpr std::array<RuleName, 6> kRuleNames{{
    {RuleKind::kEuMax, "eu_max"},
    {RuleKind::kPointwiseDominance, "pointwise_dominance"},
    {RuleKind::kMaximality, "maximality"},
    {RuleKind::kEAdmissibility, "e_admissibility"},
    {RuleKind::kGammaMaximin, "gamma_maximin"},
    {RuleKind::kIntervalDominance, "interval_dominance"},
}};

}  // namespace

std::string_view to_string(RuleKind kind) {
  for (const RuleName& r : kRuleNames) {
    if (r.kind == kind) return r.name;
  }
  return "unknown";
}

std::optional<RuleKind> parse_rule_kind(std::string_view name) {
  for (const RuleName& r : kRuleNames) {
    if (r.name == name) return r.kind;
  }
  return std::nullopt;
}

const std::vector<RuleKind>& all_rule_kinds() {
  static const std::vector<RuleKind> kinds = [] {
    std::vector<RuleKind> out;
    for (const RuleName& r : kRuleNames) out.push_back(r.kind);
    return out;
  }();
  return kinds;
}

bool needs_probability(RuleKind kind) { return kind == RuleKind::kEuMax; }

bool needs_credal(RuleKind kind) {
  return kind != RuleKind::kEuMax && kind != RuleKind::kPointwiseDominance;
}

RulePtr make_rule(RuleKind kind, const ChoiceContext& context) {
  if (needs_probability(kind) && !context.probability()) {
    throw Error(ErrorKind::kMissingContext,
                std::string(to_string(kind)) + " needs a probability");
  }
  if (needs_credal(kind) && !context.credal()) {
    throw Error(ErrorKind::kMissingContext,
                std::string(to_string(kind)) + " needs a credal set");
  }
  switch (kind) {
    case RuleKind::kEuMax:
      return std::make_shared<EuMax>(context);
    case RuleKind::kPointwiseDominance:
      return std::make_shared<PointwiseDominance>(context);
    default:
      return std::make_shared<CredalRule>(kind, context);
  }
}

RulePtr make_function_rule(std::string name, SelectFn fn) {
  return std::make_shared<FunctionRule>(std::move(name), std::move(fn));
}

}  // namespace choicetree
