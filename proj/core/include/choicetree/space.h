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

#ifndef CHOICETREE_SPACE_H_
#define CHOICETREE_SPACE_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace choicetree {

// Events are stored as 64-bit masks, which caps the possibility space.
inline constexpr std::size_t kMaxStates = 64;

class Event;

// The finite set of states. Labels are unique and their indices never
// change; copies share the same immutable label table.
class PossibilitySpace {
 public:
  explicit PossibilitySpace(std::vector<std::string> labels);

  std::size_t size() const;
  const std::string& label(std::size_t index) const;
  const std::vector<std::string>& labels() const;
  std::optional<std::size_t> index_of(std::string_view label) const;

  Event all() const;
  Event none() const;
  Event singleton(std::size_t index) const;
  Event from_indices(std::initializer_list<std::size_t> indices) const;
  Event from_indices(std::span<const std::size_t> indices) const;
  Event from_bits(std::uint64_t bits) const;

  // Spaces compare by their label lists.
  friend bool operator==(const PossibilitySpace& a, const PossibilitySpace& b);

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// A subset of a PossibilitySpace. Combining events of different spaces is an
// error (kSpaceMismatch).
class Event {
 public:
  Event(PossibilitySpace space, std::uint64_t bits);

  const PossibilitySpace& space() const { return space_; }
  std::uint64_t bits() const { return bits_; }

  bool empty() const { return bits_ == 0; }
  bool is_full() const;
  std::size_t count() const;
  bool contains(std::size_t state) const {
    return state < 64 && ((bits_ >> state) & 1u) != 0;
  }
  std::vector<std::size_t> states() const;

  Event complement() const;
  Event operator&(const Event& other) const;
  Event operator|(const Event& other) const;
  Event operator-(const Event& other) const;
  bool is_subset_of(const Event& other) const;
  bool intersects(const Event& other) const;

  // Human-readable "{w1,w3}".
  std::string to_string() const;

  friend bool operator==(const Event& a, const Event& b);
  friend bool operator<(const Event& a, const Event& b) {
    return a.bits_ < b.bits_;
  }

 private:
  void require_same_space(const Event& other) const;

  PossibilitySpace space_;
  std::uint64_t bits_;
};

// True iff the events are non-empty, pairwise disjoint, share one space, and
// cover it.
bool is_partition(std::span<const Event> events);

// Throws Error(kNotAPartition) naming `where` when is_partition fails.
void require_partition(std::span<const Event> events, std::string_view where);

}  // namespace choicetree

#endif  // CHOICETREE_SPACE_H_
