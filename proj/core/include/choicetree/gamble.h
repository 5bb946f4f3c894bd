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

#ifndef CHOICETREE_GAMBLE_H_
#define CHOICETREE_GAMBLE_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "choicetree/rational.h"
#include "choicetree/space.h"

namespace choicetree {

// Index of a reward symbol inside its RewardTable.
struct RewardId {
  std::uint32_t value = 0;
  friend auto operator<=>(const RewardId&, const RewardId&) = default;
};

// Reward symbols with exact utilities. Ids follow declaration order.
class RewardTable {
 public:
  RewardId add(std::string name, Rational utility);

  std::size_t size() const { return entries_.size(); }
  const std::string& name(RewardId id) const;
  const Rational& utility(RewardId id) const;
  std::optional<RewardId> find(std::string_view name) const;
  void set_utility(RewardId id, Rational utility);

  friend bool operator==(const RewardTable& a, const RewardTable& b);

 private:
  struct Entry {
    std::string name;
    Rational utility;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries_;
  std::map<std::string, RewardId, std::less<>> index_;
};

// A total map from state index to reward symbol. Ordering is lexicographic
// over the state-indexed reward ids, which is the canonical member order of
// a GambleSet.
class Gamble {
 public:
  Gamble() = default;
  explicit Gamble(std::vector<RewardId> values) : values_(std::move(values)) {}
  Gamble(std::initializer_list<RewardId> values) : values_(values) {}

  static Gamble constant(std::size_t num_states, RewardId reward);

  std::size_t size() const { return values_.size(); }
  RewardId operator[](std::size_t state) const { return values_[state]; }
  const std::vector<RewardId>& values() const { return values_; }

  // A X == A Y, i.e. pointwise equality restricted to `event`.
  bool agrees_on(const Gamble& other, const Event& event) const;

  // The states where this gamble yields `reward` (X^{-1}(r)).
  std::uint64_t level_set_bits(RewardId reward) const;

  // Distinct reward ids attained, ascending.
  std::vector<RewardId> attained() const;

  std::string to_string(const RewardTable& rewards) const;

  friend auto operator<=>(const Gamble&, const Gamble&) = default;
  friend bool operator==(const Gamble&, const Gamble&) = default;

 private:
  std::vector<RewardId> values_;
};

// A gamble defined only on part of the space (the E X of the ⊕ notation).
class PartialGamble {
 public:
  PartialGamble(PossibilitySpace space, std::vector<std::optional<RewardId>> values);

  // E X: the restriction of a total gamble to an event.
  static PartialGamble restriction(const Gamble& gamble, const Event& event);

  const Event& domain() const { return domain_; }
  const std::vector<std::optional<RewardId>>& values() const { return values_; }

 private:
  std::vector<std::optional<RewardId>> values_;
  Event domain_;
};

// Finite deduplicated set of gambles in canonical order.
class GambleSet {
 public:
  GambleSet() = default;
  explicit GambleSet(std::vector<Gamble> members);
  GambleSet(std::initializer_list<Gamble> members);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const Gamble& gamble) const;
  bool is_subset_of(const GambleSet& other) const;
  const std::vector<Gamble>& members() const { return members_; }
  const Gamble& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::string to_string(const RewardTable& rewards) const;

  friend bool operator==(const GambleSet&, const GambleSet&) = default;

 private:
  std::vector<Gamble> members_;
};

GambleSet set_union(const GambleSet& a, const GambleSet& b);
GambleSet set_union(std::span<const GambleSet> sets);
GambleSet set_intersection(const GambleSet& a, const GambleSet& b);
GambleSet set_difference(const GambleSet& a, const GambleSet& b);

struct PartitionPart {
  Event event;
  PartialGamble gamble;
};

// ⊕_i E_i X_i. Throws kNotAPartition or kDomainMismatch.
Gamble combine_on_partition(std::span<const PartitionPart> parts);

// Total-gamble form: takes X_i on E_i. The events must form a partition.
Gamble combine_on_partition(std::span<const Event> partition,
                            std::span<const Gamble> gambles);

// A X ⊕ Ā Z.
Gamble mix(const Event& event, const Gamble& on_event, const Gamble& off_event);

// ⊕_i E_i 𝒳_i = { ⊕_i E_i X_i : X_i ∈ 𝒳_i }. Throws kNotAPartition,
// kEmptyInputSet, or kEnumerationLimitExceeded past `limit` combinations.
GambleSet gamble_set_sum(std::span<const Event> partition,
                         std::span<const GambleSet> sets,
                         std::size_t limit = SIZE_MAX);

// A 𝒳 ⊕ Ā 𝒵.
GambleSet mix(const Event& event, const GambleSet& on_event,
              const GambleSet& off_event);

struct ConsistencyVerdict {
  bool consistent = true;
  // On failure: a member and a reward it attains only outside the event.
  std::optional<Gamble> gamble;
  std::optional<RewardId> reward;

  explicit operator bool() const { return consistent; }
};

// A-consistency: every reward a member attains is also attained inside A.
// Throws kEmptyEvent when A is empty.
ConsistencyVerdict check_a_consistency(const GambleSet& set, const Event& a);
ConsistencyVerdict check_a_consistency(const Gamble& gamble, const Event& a);

}  // namespace choicetree

#endif  // CHOICETREE_GAMBLE_H_
