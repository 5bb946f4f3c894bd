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

#include "choicetree/laws.h"

#include <algorithm>
#include <array>
#include <utility>

#include "choicetree/error.h"
#include "choicetree/generators.h"

namespace choicetree {

namespace {

struct PropertyName {
  PropertyId id;
  std::string_view short_name;
  std::string_view long_name;
};

constexpr std::array<PropertyName, 12> kPropertyNames{{
    {PropertyId::kP1Conditioning, "P1", "P1_conditioning"},
    {PropertyId::kP2Intersection, "P2", "P2_intersection"},
    {PropertyId::kP3Mixture, "P3", "P3_mixture"},
    {PropertyId::kP4StrongPathIndependence, "P4", "P4_strong_path_independence"},
    {PropertyId::kP5VeryStrongPathIndependence, "P5",
     "P5_very_strong_path_independence"},
    {PropertyId::kP6TotalPreorder, "P6", "P6_total_preorder"},
    {PropertyId::kP7BackwardConditioning, "P7", "P7_backward_conditioning"},
    {PropertyId::kP8Insensitivity, "P8", "P8_insensitivity"},
    {PropertyId::kP9Preservation, "P9", "P9_preservation"},
    {PropertyId::kP10BackwardMixture, "P10", "P10_backward_mixture"},
    {PropertyId::kP11PathIndependence, "P11", "P11_path_independence"},
    {PropertyId::kLSetsumFactorization, "L", "L_setsum_factorization"},
}};

}  // namespace

std::string_view to_string(PropertyId id) {
  for (const PropertyName& p : kPropertyNames) {
    if (p.id == id) return p.short_name;
  }
  return "?";
}

std::string_view long_name(PropertyId id) {
  for (const PropertyName& p : kPropertyNames) {
    if (p.id == id) return p.long_name;
  }
  return "?";
}

std::optional<PropertyId> parse_property_id(std::string_view name) {
  for (const PropertyName& p : kPropertyNames) {
    if (p.short_name == name || p.long_name == name) return p.id;
  }
  return std::nullopt;
}

const std::vector<PropertyId>& all_property_ids() {
  static const std::vector<PropertyId> ids = [] {
    std::vector<PropertyId> out;
    for (const PropertyName& p : kPropertyNames) out.push_back(p.id);
    return out;
  }();
  return ids;
}

PropertyInstance::PropertyInstance(ChoiceContext context_in,
                                   PossibilitySpace space)
    : context(std::move(context_in)), a(space.all()), b(space.all()) {}

std::size_t PropertyInstance::gamble_count() const {
  std::vector<GambleSet> all = sets;
  all.push_back(z);
  return set_union(all).size();
}

std::string PropertyInstance::describe() const {
  const RewardTable& r = context.utilities();
  std::string out = "states {";
  for (std::size_t s = 0; s < space().size(); ++s) {
    if (s != 0) out += ",";
    out += space().label(s);
  }
  out += "}; A=" + a.to_string() + "; B=" + b.to_string();
  for (std::size_t i = 0; i < partition.size(); ++i) {
    out += "; A" + std::to_string(i + 1) + "=" + partition[i].to_string();
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    out += "; X" + std::to_string(i + 1) + "=" + sets[i].to_string(r);
  }
  if (!z.empty()) out += "; Z=" + z.to_string(r);
  return out;
}

namespace {

[[noreturn]] void malformed(PropertyId id, const std::string& why) {
  throw Error(ErrorKind::kMalformedInstance,
              std::string(to_string(id)) + " instance: " + why);
}

void require_consistent_set(PropertyId id, const GambleSet& set, const Event& ev,
                            const std::string& what) {
  if (set.empty()) malformed(id, what + " is empty");
  if (ev.empty()) malformed(id, what + " is conditioned on an empty event");
  for (const Gamble& g : set) {
    if (g.size() != ev.space().size()) {
      malformed(id, what + " has a gamble of the wrong length");
    }
  }
  if (!check_a_consistency(set, ev)) {
    malformed(id, what + " is not " + ev.to_string() + "-consistent");
  }
}

void require_count(PropertyId id, std::size_t have, std::size_t want) {
  if (have != want) {
    malformed(id, "expected " + std::to_string(want) + " gamble sets, got " +
                      std::to_string(have));
  }
}

void require_mixture_events(PropertyId id, const PropertyInstance& in) {
  if (!in.a.intersects(in.b)) malformed(id, "A and B are disjoint");
  if (!in.a.complement().intersects(in.b)) {
    malformed(id, "the complement of A misses B");
  }
}

GambleSet mix_with(const Event& a, const GambleSet& x, const GambleSet& z) {
  return mix(a, x, z);
}

std::string show(const GambleSet& s, const PropertyInstance& in) {
  return s.to_string(in.context.utilities());
}

InstanceVerdict fail(std::string detail, GambleSet expected, GambleSet actual) {
  InstanceVerdict v;
  v.holds = false;
  v.detail = std::move(detail);
  v.expected = std::move(expected);
  v.actual = std::move(actual);
  return v;
}

InstanceVerdict check_p1(const ChoiceRule& rule, const PropertyInstance& in) {
  const GambleSet& x = in.sets[0];
  const GambleSet chosen = rule.select(x, in.a);
  for (const Gamble& g : chosen) {
    for (const Gamble& h : x) {
      if (g.agrees_on(h, in.a) && !chosen.contains(h)) {
        return fail("gambles equal on A but only one selected: " +
                        g.to_string(in.context.utilities()) + " kept, " +
                        h.to_string(in.context.utilities()) + " dropped",
                    GambleSet{g, h}, chosen);
      }
    }
  }
  return {};
}

InstanceVerdict check_p2(const ChoiceRule& rule, const PropertyInstance& in) {
  const GambleSet& x = in.sets[0];
  const GambleSet& y = in.sets[1];
  const GambleSet opt_x_in_y = set_intersection(rule.select(x, in.a), y);
  if (opt_x_in_y.empty()) return {};
  const GambleSet opt_y = rule.select(y, in.a);
  if (opt_y != opt_x_in_y) {
    return fail("opt(Y|A) = " + show(opt_y, in) + " but opt(X|A) & Y = " +
                    show(opt_x_in_y, in),
                opt_x_in_y, opt_y);
  }
  return {};
}

// Shared by P3 (equality) and P10 (inclusion of the left side).
InstanceVerdict check_mixture(const ChoiceRule& rule, const PropertyInstance& in,
                              bool inclusion_only) {
  const GambleSet& x = in.sets[0];
  const GambleSet lhs = rule.select(mix_with(in.a, x, in.z), in.b);
  const GambleSet rhs = mix_with(in.a, rule.select(x, in.a & in.b), in.z);
  const bool ok = inclusion_only ? lhs.is_subset_of(rhs) : lhs == rhs;
  if (!ok) {
    return fail(std::string("opt(AX + notA Z | B) = ") + show(lhs, in) +
                    (inclusion_only ? " is not inside " : " differs from ") +
                    "A opt(X | A&B) + notA Z = " + show(rhs, in),
                rhs, lhs);
  }
  return {};
}

InstanceVerdict check_p7(const ChoiceRule& rule, const PropertyInstance& in) {
  const GambleSet& x = in.sets[0];
  const Event ab = in.a & in.b;
  const GambleSet opt_x = rule.select(x, ab);
  const GambleSet mixed_opt = rule.select(mix_with(in.a, x, in.z), in.b);
  for (const Gamble& g : opt_x) {
    bool survives_mixing = false;
    for (const Gamble& zg : in.z) {
      if (mixed_opt.contains(mix(in.a, g, zg))) {
        survives_mixing = true;
        break;
      }
    }
    if (!survives_mixing) continue;
    for (const Gamble& h : x) {
      if (g.agrees_on(h, in.a) && !opt_x.contains(h)) {
        return fail("gambles equal on A, " +
                        g.to_string(in.context.utilities()) +
                        " selected given A&B and after mixing, " +
                        h.to_string(in.context.utilities()) + " dropped",
                    GambleSet{g, h}, opt_x);
      }
    }
  }
  return {};
}

InstanceVerdict check_p8_on(const ChoiceRule& rule, const PropertyInstance& in,
                            const GambleSet& y) {
  const GambleSet opt_x = rule.select(in.sets[0], in.a);
  if (!opt_x.is_subset_of(y)) return {};
  const GambleSet opt_y = rule.select(y, in.a);
  if (opt_y != opt_x) {
    return fail("opt(X|A) = " + show(opt_x, in) + " lies in Y = " + show(y, in) +
                    " but opt(Y|A) = " + show(opt_y, in),
                opt_x, opt_y);
  }
  return {};
}

InstanceVerdict check_p8(const ChoiceRule& rule, const PropertyInstance& in) {
  InstanceVerdict literal = check_p8_on(rule, in, in.sets[1]);
  if (!literal) return literal;
  const GambleSet widened =
      set_union(in.sets[1], rule.select(in.sets[0], in.a));
  return check_p8_on(rule, in, widened);
}

InstanceVerdict check_p9(const ChoiceRule& rule, const PropertyInstance& in) {
  const GambleSet& y = in.sets[1];
  const GambleSet opt_x_in_y = set_intersection(rule.select(in.sets[0], in.a), y);
  const GambleSet opt_y = rule.select(y, in.a);
  if (!opt_x_in_y.is_subset_of(opt_y)) {
    return fail("opt(X|A) & Y = " + show(opt_x_in_y, in) +
                    " is not inside opt(Y|A) = " + show(opt_y, in),
                opt_x_in_y, opt_y);
  }
  return {};
}

std::vector<GambleSet> selections(const ChoiceRule& rule,
                                  const std::vector<GambleSet>& sets,
                                  const Event& a) {
  std::vector<GambleSet> out;
  for (const GambleSet& s : sets) out.push_back(rule.select(s, a));
  return out;
}

InstanceVerdict check_p4(const ChoiceRule& rule, const PropertyInstance& in) {
  const GambleSet opt_union = rule.select(set_union(in.sets), in.a);
  const std::vector<GambleSet> opts = selections(rule, in.sets, in.a);
  // Any admissible index set lies inside the one collecting every i whose
  // selection stays inside opt of the union, and using more such i only
  // enlarges the union of selections, so testing that maximal set suffices.
  std::vector<GambleSet> chosen;
  for (const GambleSet& o : opts) {
    if (o.is_subset_of(opt_union)) chosen.push_back(o);
  }
  const GambleSet best = set_union(chosen);
  if (chosen.empty() || best != opt_union) {
    return fail("no union of member selections equals opt(union) = " +
                    show(opt_union, in) + "; largest candidate " + show(best, in),
                opt_union, best);
  }
  return {};
}

InstanceVerdict check_p5(const ChoiceRule& rule, const PropertyInstance& in) {
  const GambleSet opt_union = rule.select(set_union(in.sets), in.a);
  std::vector<GambleSet> hit;
  for (const GambleSet& s : in.sets) {
    if (!set_intersection(s, opt_union).empty()) hit.push_back(rule.select(s, in.a));
  }
  const GambleSet rhs = set_union(hit);
  if (rhs != opt_union) {
    return fail("opt(union) = " + show(opt_union, in) +
                    " but the selections of the sets it meets give " +
                    show(rhs, in),
                opt_union, rhs);
  }
  return {};
}

InstanceVerdict check_p11(const ChoiceRule& rule, const PropertyInstance& in) {
  const GambleSet lhs = rule.select(set_union(in.sets), in.a);
  const GambleSet rhs =
      rule.select(set_union(selections(rule, in.sets, in.a)), in.a);
  if (lhs != rhs) {
    return fail("opt(union) = " + show(lhs, in) +
                    " but opt(union of selections) = " + show(rhs, in),
                lhs, rhs);
  }
  return {};
}

InstanceVerdict check_p6(const ChoiceRule& rule, const PropertyInstance& in) {
  const GambleSet all = set_union(in.sets);
  const std::size_t n = all.size();
  const RewardTable& r = in.context.utilities();
  // weakly[i][j]: i is selected from the pair {i, j}.
  std::vector<std::vector<bool>> weakly(n, std::vector<bool>(n, true));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const GambleSet pick = rule.select(GambleSet{all[i], all[j]}, in.a);
      weakly[i][j] = pick.contains(all[i]);
      weakly[j][i] = pick.contains(all[j]);
      if (!weakly[i][j] && !weakly[j][i]) {
        return fail("revealed relation not total on " + all[i].to_string(r) +
                        ", " + all[j].to_string(r),
                    GambleSet{all[i], all[j]}, pick);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!weakly[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (weakly[j][k] && !weakly[i][k]) {
          return fail("revealed relation intransitive: " + all[i].to_string(r) +
                          " >= " + all[j].to_string(r) + " >= " +
                          all[k].to_string(r) + " but not " +
                          all[i].to_string(r) + " >= " + all[k].to_string(r),
                      GambleSet{all[i], all[j], all[k]}, GambleSet{all[i]});
        }
      }
    }
  }
  for (const GambleSet& s : in.sets) {
    std::vector<Gamble> maximal;
    for (const Gamble& g : s) {
      const std::size_t gi = static_cast<std::size_t>(
          std::lower_bound(all.begin(), all.end(), g) - all.begin());
      bool top = true;
      for (const Gamble& h : s) {
        const std::size_t hi = static_cast<std::size_t>(
            std::lower_bound(all.begin(), all.end(), h) - all.begin());
        if (!weakly[gi][hi]) {
          top = false;
          break;
        }
      }
      if (top) maximal.push_back(g);
    }
    const GambleSet expected(std::move(maximal));
    const GambleSet actual = rule.select(s, in.a);
    if (expected != actual) {
      return fail("opt(" + show(s, in) + "|A) = " + show(actual, in) +
                      " but the revealed maximal elements are " +
                      show(expected, in),
                  expected, actual);
    }
  }
  return {};
}

InstanceVerdict check_l(const ChoiceRule& rule, const PropertyInstance& in) {
  const GambleSet lhs = rule.select(gamble_set_sum(in.partition, in.sets), in.b);
  std::vector<GambleSet> parts;
  for (std::size_t i = 0; i < in.sets.size(); ++i) {
    parts.push_back(rule.select(in.sets[i], in.partition[i] & in.b));
  }
  const GambleSet rhs = rule.select(gamble_set_sum(in.partition, parts), in.b);
  if (lhs != rhs) {
    return fail("opt(sum of X_i | B) = " + show(lhs, in) +
                    " but opt(sum of opt(X_i | A_i&B) | B) = " + show(rhs, in),
                lhs, rhs);
  }
  return {};
}

}  // namespace

void require_preconditions(PropertyId id, const PropertyInstance& in) {
  const std::size_t n = in.space().size();
  auto sized = [&](const std::optional<MassFunction>& p) {
    if (p && p->size() != n) malformed(id, "mass function has the wrong length");
  };
  sized(in.context.probability());
  if (in.context.credal()) {
    for (const MassFunction& p : *in.context.credal()) sized(p);
  }
  switch (id) {
    case PropertyId::kP1Conditioning:
      require_count(id, in.sets.size(), 1);
      require_consistent_set(id, in.sets[0], in.a, "X");
      break;
    case PropertyId::kP2Intersection:
    case PropertyId::kP8Insensitivity:
    case PropertyId::kP9Preservation:
      require_count(id, in.sets.size(), 2);
      require_consistent_set(id, in.sets[0], in.a, "X");
      require_consistent_set(id, in.sets[1], in.a, "Y");
      if (!in.sets[1].is_subset_of(in.sets[0])) malformed(id, "Y is not inside X");
      break;
    case PropertyId::kP3Mixture:
    case PropertyId::kP10BackwardMixture:
    case PropertyId::kP7BackwardConditioning:
      require_count(id, in.sets.size(), 1);
      require_mixture_events(id, in);
      if (id != PropertyId::kP7BackwardConditioning && in.z.size() != 1) {
        malformed(id, "needs exactly one gamble Z");
      }
      require_consistent_set(id, in.sets[0], in.a & in.b, "X");
      require_consistent_set(id, in.z, in.a.complement() & in.b, "Z");
      break;
    case PropertyId::kP4StrongPathIndependence:
    case PropertyId::kP5VeryStrongPathIndependence:
    case PropertyId::kP6TotalPreorder:
    case PropertyId::kP11PathIndependence:
      if (in.sets.empty()) malformed(id, "needs at least one set");
      for (std::size_t i = 0; i < in.sets.size(); ++i) {
        require_consistent_set(id, in.sets[i], in.a, "X" + std::to_string(i + 1));
      }
      break;
    case PropertyId::kLSetsumFactorization:
      if (in.sets.empty() || in.sets.size() != in.partition.size()) {
        malformed(id, "needs one set per partition block");
      }
      if (!is_partition(in.partition)) malformed(id, "blocks do not partition");
      for (std::size_t i = 0; i < in.sets.size(); ++i) {
        const Event ev = in.partition[i] & in.b;
        if (ev.empty()) malformed(id, "a block misses B");
        require_consistent_set(id, in.sets[i], ev, "X" + std::to_string(i + 1));
      }
      break;
  }
}

InstanceVerdict check_property_instance(PropertyId id, const ChoiceRule& rule,
                                        const PropertyInstance& in) {
  require_preconditions(id, in);
  switch (id) {
    case PropertyId::kP1Conditioning:
      return check_p1(rule, in);
    case PropertyId::kP2Intersection:
      return check_p2(rule, in);
    case PropertyId::kP3Mixture:
      return check_mixture(rule, in, false);
    case PropertyId::kP4StrongPathIndependence:
      return check_p4(rule, in);
    case PropertyId::kP5VeryStrongPathIndependence:
      return check_p5(rule, in);
    case PropertyId::kP6TotalPreorder:
      return check_p6(rule, in);
    case PropertyId::kP7BackwardConditioning:
      return check_p7(rule, in);
    case PropertyId::kP8Insensitivity:
      return check_p8(rule, in);
    case PropertyId::kP9Preservation:
      return check_p9(rule, in);
    case PropertyId::kP10BackwardMixture:
      return check_mixture(rule, in, true);
    case PropertyId::kP11PathIndependence:
      return check_p11(rule, in);
    case PropertyId::kLSetsumFactorization:
      return check_l(rule, in);
  }
  return {};
}

RuleFactory rule_factory(RuleKind kind) {
  return [kind](const ChoiceContext& context) { return make_rule(kind, context); };
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 finaliser over (seed, index).
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

bool still_violated(PropertyId id, const RuleFactory& factory,
                    const PropertyInstance& in) {
  try {
    require_preconditions(id, in);
    RulePtr rule = factory(in.context);
    return !check_property_instance(id, *rule, in);
  } catch (const Error&) {
    return false;
  }
}

std::uint64_t drop_bit(std::uint64_t bits, std::size_t s) {
  const std::uint64_t low = bits & ((std::uint64_t{1} << s) - 1);
  const std::uint64_t high = s + 1 < 64 ? bits >> (s + 1) : 0;
  return low | (high << s);
}

Gamble drop_state(const Gamble& g, std::size_t s) {
  std::vector<RewardId> v = g.values();
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(s));
  return Gamble(std::move(v));
}

GambleSet drop_state(const GambleSet& set, std::size_t s) {
  std::vector<Gamble> out;
  for (const Gamble& g : set) out.push_back(drop_state(g, s));
  return GambleSet(std::move(out));
}

MassFunction drop_state(const MassFunction& p, std::size_t s) {
  MassFunction out = p;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(s));
  Rational total = 0;
  for (const Rational& m : out) total += m;
  for (Rational& m : out) {
    m /= total;
    m.canonicalize();
  }
  return out;
}

std::optional<PropertyInstance> without_state(const PropertyInstance& in,
                                              std::size_t s) {
  std::vector<std::string> labels = in.space().labels();
  if (labels.size() < 2) return std::nullopt;
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(s));
  PossibilitySpace space(std::move(labels));
  std::optional<MassFunction> p;
  if (in.context.probability()) p = drop_state(*in.context.probability(), s);
  std::optional<std::vector<MassFunction>> credal;
  if (in.context.credal()) {
    credal.emplace();
    for (const MassFunction& m : *in.context.credal()) {
      credal->push_back(drop_state(m, s));
    }
  }
  PropertyInstance out(ChoiceContext(in.context.utilities(), p, credal), space);
  out.a = space.from_bits(drop_bit(in.a.bits(), s));
  out.b = space.from_bits(drop_bit(in.b.bits(), s));
  for (const Event& e : in.partition) {
    out.partition.push_back(space.from_bits(drop_bit(e.bits(), s)));
  }
  for (const GambleSet& set : in.sets) out.sets.push_back(drop_state(set, s));
  out.z = drop_state(in.z, s);
  return out;
}

GambleSet without(const GambleSet& set, const Gamble& g) {
  std::vector<Gamble> out;
  for (const Gamble& h : set) {
    if (h != g) out.push_back(h);
  }
  return GambleSet(std::move(out));
}

bool nested_pair(PropertyId id) {
  return id == PropertyId::kP2Intersection || id == PropertyId::kP8Insensitivity ||
         id == PropertyId::kP9Preservation;
}

// Candidates in a fixed order: gamble removals first, then state removals.
std::vector<PropertyInstance> shrink_candidates(PropertyId id,
                                                const PropertyInstance& in) {
  std::vector<PropertyInstance> out;
  for (std::size_t i = 0; i < in.sets.size(); ++i) {
    for (const Gamble& g : in.sets[i]) {
      PropertyInstance c = in;
      c.sets[i] = without(c.sets[i], g);
      if (nested_pair(id) && i == 0) c.sets[1] = without(c.sets[1], g);
      bool empty = false;
      for (const GambleSet& s : c.sets) empty = empty || s.empty();
      if (!empty) out.push_back(std::move(c));
    }
  }
  if (in.z.size() > 1) {
    for (const Gamble& g : in.z) {
      PropertyInstance c = in;
      c.z = without(c.z, g);
      out.push_back(std::move(c));
    }
  }
  for (std::size_t s = 0; s < in.space().size(); ++s) {
    if (auto c = without_state(in, s)) out.push_back(std::move(*c));
  }
  return out;
}

}  // namespace

PropertyInstance shrink_instance(PropertyId id, const RuleFactory& factory,
                                 PropertyInstance instance, std::size_t* steps) {
  std::size_t taken = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (PropertyInstance& c : shrink_candidates(id, instance)) {
      if (still_violated(id, factory, c)) {
        instance = std::move(c);
        ++taken;
        progress = true;
        break;
      }
    }
  }
  if (steps != nullptr) *steps = taken;
  return instance;
}

LawReport falsify_property(PropertyId id, const RuleFactory& factory,
                           const GenConfig& gen, const SamplingConfig& sampling,
                           std::uint64_t seed) {
  LawReport report;
  report.property = id;
  for (std::size_t k = 0; k < sampling.budget; ++k) {
    PropertyInstance in = random_gamble_instance(id, gen, instance_seed(seed, k));
    RulePtr rule = factory(in.context);
    if (report.rule.empty()) report.rule = rule->name();
    ++report.instances_checked;
    InstanceVerdict v = check_property_instance(id, *rule, in);
    if (v) continue;
    report.violated = true;
    if (sampling.shrink) {
      in = shrink_instance(id, factory, std::move(in), &report.shrink_steps);
      v = check_property_instance(id, *factory(in.context), in);
    }
    report.witness = std::move(in);
    report.witness_verdict = std::move(v);
    break;
  }
  return report;
}

namespace {

PerfectnessReport perfectness(const DecisionTree& tree, const ChoiceRule& rule,
                              std::size_t cap, bool weak) {
  PerfectnessReport report;
  report.weak = weak;
  report.root = norm_opt(tree, rule, cap);
  const NormalFormSolution& sol = report.root.solution;
  tree.visit([&](const NodeId& id, const Node&, const Event&) {
    bool reached = false;
    for (const Strategy& s : sol) {
      if (strategy_contains(tree, s, id)) {
        reached = true;
        break;
      }
    }
    if (!reached) return;
    ++report.nodes_checked;
    const DecisionTree sub = subtree_at(tree, id);
    NormalFormSolution actual = restrict_solution(tree, sol, id);
    NormalFormSolution expected = norm_opt(sub, rule, cap).solution;
    const bool ok = weak ? actual.is_subset_of(expected) : actual == expected;
    if (!ok) {
      NodeVerdict v;
      v.node = id;
      v.expected_gambles = gamb(sub, expected);
      v.actual_gambles = gamb(sub, actual);
      v.expected = std::move(expected);
      v.actual = std::move(actual);
      report.violations.push_back(std::move(v));
    }
  });
  return report;
}

}  // namespace

PerfectnessReport check_subtree_perfectness(const DecisionTree& tree,
                                            const ChoiceRule& rule,
                                            std::size_t cap) {
  return perfectness(tree, rule, cap, false);
}

PerfectnessReport check_weak_subtree_perfectness(const DecisionTree& tree,
                                                 const ChoiceRule& rule,
                                                 std::size_t cap) {
  return perfectness(tree, rule, cap, true);
}

}  // namespace choicetree
