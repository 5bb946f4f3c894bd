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

#include "choicetree/gamble.h"

#include <algorithm>
#include <iterator>
#include <string>
#include <utility>

#include "choicetree/error.h"

namespace choicetree {

RewardId RewardTable::add(std::string name, Rational utility) {
  RewardId id{static_cast<std::uint32_t>(entries_.size())};
  if (!index_.emplace(name, id).second) {
    throw Error(ErrorKind::kDuplicateDefinition,
                "reward '" + name + "' defined twice");
  }
  utility.canonicalize();
  entries_.push_back({std::move(name), std::move(utility)});
  return id;
}

const std::string& RewardTable::name(RewardId id) const {
  if (id.value >= entries_.size()) {
    throw Error(ErrorKind::kUnknownReference, "reward id out of range");
  }
  return entries_[id.value].name;
}

const Rational& RewardTable::utility(RewardId id) const {
  if (id.value >= entries_.size()) {
    throw Error(ErrorKind::kUnknownReference, "reward id out of range");
  }
  return entries_[id.value].utility;
}

std::optional<RewardId> RewardTable::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void RewardTable::set_utility(RewardId id, Rational utility) {
  if (id.value >= entries_.size()) {
    throw Error(ErrorKind::kUnknownReference, "reward id out of range");
  }
  utility.canonicalize();
  entries_[id.value].utility = std::move(utility);
}

bool operator==(const RewardTable& a, const RewardTable& b) {
  return a.entries_ == b.entries_;
}

Gamble Gamble::constant(std::size_t num_states, RewardId reward) {
  return Gamble(std::vector<RewardId>(num_states, reward));
}

bool Gamble::agrees_on(const Gamble& other, const Event& event) const {
  for (std::size_t s : event.states()) {
    if (values_.at(s) != other.values_.at(s)) return false;
  }
  return true;
}

std::uint64_t Gamble::level_set_bits(RewardId reward) const {
  std::uint64_t bits = 0;
  for (std::size_t s = 0; s < values_.size(); ++s) {
    if (values_[s] == reward) bits |= std::uint64_t{1} << s;
  }
  return bits;
}

std::vector<RewardId> Gamble::attained() const {
  std::vector<RewardId> out = values_;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string Gamble::to_string(const RewardTable& rewards) const {
  std::string out = "(";
  for (std::size_t s = 0; s < values_.size(); ++s) {
    if (s != 0) out += ",";
    out += rewards.name(values_[s]);
  }
  return out + ")";
}

PartialGamble::PartialGamble(PossibilitySpace space,
                             std::vector<std::optional<RewardId>> values)
    : values_(std::move(values)), domain_(space.none()) {
  if (values_.size() != space.size()) {
    throw Error(ErrorKind::kDomainMismatch,
                "partial gamble length differs from the space size");
  }
  std::uint64_t bits = 0;
  for (std::size_t s = 0; s < values_.size(); ++s) {
    if (values_[s]) bits |= std::uint64_t{1} << s;
  }
  domain_ = space.from_bits(bits);
}

PartialGamble PartialGamble::restriction(const Gamble& gamble,
                                         const Event& event) {
  const PossibilitySpace& space = event.space();
  if (gamble.size() != space.size()) {
    throw Error(ErrorKind::kDomainMismatch,
                "gamble length differs from the space size");
  }
  std::vector<std::optional<RewardId>> values(space.size());
  for (std::size_t s : event.states()) values[s] = gamble[s];
  return PartialGamble(space, std::move(values));
}

GambleSet::GambleSet(std::vector<Gamble> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

GambleSet::GambleSet(std::initializer_list<Gamble> members)
    : GambleSet(std::vector<Gamble>(members)) {}

bool GambleSet::contains(const Gamble& gamble) const {
  return std::binary_search(members_.begin(), members_.end(), gamble);
}

bool GambleSet::is_subset_of(const GambleSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

std::string GambleSet::to_string(const RewardTable& rewards) const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i != 0) out += ", ";
    out += members_[i].to_string(rewards);
  }
  return out + "}";
}

GambleSet set_union(const GambleSet& a, const GambleSet& b) {
  std::vector<Gamble> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return GambleSet(std::move(out));
}

GambleSet set_union(std::span<const GambleSet> sets) {
  std::vector<Gamble> out;
  for (const GambleSet& s : sets) {
    out.insert(out.end(), s.begin(), s.end());
  }
  return GambleSet(std::move(out));
}

GambleSet set_intersection(const GambleSet& a, const GambleSet& b) {
  std::vector<Gamble> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return GambleSet(std::move(out));
}

GambleSet set_difference(const GambleSet& a, const GambleSet& b) {
  std::vector<Gamble> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return GambleSet(std::move(out));
}

Gamble combine_on_partition(std::span<const PartitionPart> parts) {
  std::vector<Event> events;
  events.reserve(parts.size());
  for (const PartitionPart& part : parts) events.push_back(part.event);
  require_partition(events, "combine_on_partition");
  const PossibilitySpace& space = events.front().space();
  std::vector<RewardId> values(space.size());
  for (const PartitionPart& part : parts) {
    if (!(part.gamble.domain() == part.event)) {
      throw Error(ErrorKind::kDomainMismatch,
                  "partial gamble defined on " +
                      part.gamble.domain().to_string() + " but attached to " +
                      part.event.to_string());
    }
    for (std::size_t s : part.event.states()) {
      values[s] = *part.gamble.values()[s];
    }
  }
  return Gamble(std::move(values));
}

Gamble combine_on_partition(std::span<const Event> partition,
                            std::span<const Gamble> gambles) {
  require_partition(partition, "combine_on_partition");
  if (partition.size() != gambles.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "one gamble per partition block required");
  }
  const std::size_t n = partition.front().space().size();
  std::vector<RewardId> values(n);
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (gambles[i].size() != n) {
      throw Error(ErrorKind::kDomainMismatch,
                  "gamble length differs from the space size");
    }
    for (std::size_t s : partition[i].states()) values[s] = gambles[i][s];
  }
  return Gamble(std::move(values));
}

Gamble mix(const Event& event, const Gamble& on_event, const Gamble& off_event) {
  std::vector<RewardId> values = off_event.values();
  if (on_event.size() != values.size() || values.size() != event.space().size()) {
    throw Error(ErrorKind::kDomainMismatch,
                "gamble length differs from the space size");
  }
  for (std::size_t s : event.states()) values[s] = on_event[s];
  return Gamble(std::move(values));
}

GambleSet gamble_set_sum(std::span<const Event> partition,
                         std::span<const GambleSet> sets, std::size_t limit) {
  require_partition(partition, "gamble_set_sum");
  if (partition.size() != sets.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "one gamble set per partition block required");
  }
  std::size_t combinations = 1;
  for (const GambleSet& s : sets) {
    if (s.empty()) {
      throw Error(ErrorKind::kEmptyInputSet,
                  "gamble_set_sum needs non-empty sets");
    }
    if (combinations > limit / s.size()) {
      throw Error(ErrorKind::kEnumerationLimitExceeded,
                  "set sum exceeds " + std::to_string(limit) + " combinations");
    }
    combinations *= s.size();
  }
  if (combinations > limit) {
    throw Error(ErrorKind::kEnumerationLimitExceeded,
                "set sum exceeds " + std::to_string(limit) + " combinations");
  }

  const std::size_t n = partition.front().space().size();
  std::vector<std::vector<std::size_t>> block_states;
  for (const Event& e : partition) block_states.push_back(e.states());

  std::vector<Gamble> out;
  out.reserve(combinations);
  std::vector<std::size_t> digit(sets.size(), 0);
  std::vector<RewardId> values(n);
  for (std::size_t k = 0; k < combinations; ++k) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const Gamble& g = sets[i][digit[i]];
      for (std::size_t s : block_states[i]) values[s] = g[s];
    }
    out.emplace_back(values);
    for (std::size_t i = 0; i < digit.size(); ++i) {
      if (++digit[i] < sets[i].size()) break;
      digit[i] = 0;
    }
  }
  return GambleSet(std::move(out));
}

GambleSet mix(const Event& event, const GambleSet& on_event,
              const GambleSet& off_event) {
  if (event.empty() || event.is_full()) {
    std::vector<Gamble> out;
    const GambleSet& kept = event.empty() ? off_event : on_event;
    out.assign(kept.begin(), kept.end());
    return GambleSet(std::move(out));
  }
  const Event parts[] = {event, event.complement()};
  const GambleSet sets[] = {on_event, off_event};
  return gamble_set_sum(parts, sets);
}

ConsistencyVerdict check_a_consistency(const Gamble& gamble, const Event& a) {
  if (a.empty()) {
    throw Error(ErrorKind::kEmptyEvent, "A-consistency needs a non-empty A");
  }
  for (RewardId r : gamble.attained()) {
    if ((gamble.level_set_bits(r) & a.bits()) == 0) {
      return {false, gamble, r};
    }
  }
  return {};
}

ConsistencyVerdict check_a_consistency(const GambleSet& set, const Event& a) {
  if (a.empty()) {
    throw Error(ErrorKind::kEmptyEvent, "A-consistency needs a non-empty A");
  }
  for (const Gamble& g : set) {
    ConsistencyVerdict v = check_a_consistency(g, a);
    if (!v) return v;
  }
  return {};
}

}  // namespace choicetree
