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

#include "choicetree/space.h"

#include <bit>
#include <map>
#include <string>
#include <utility>

#include "choicetree/error.h"

namespace choicetree {
namespace {

std::uint64_t full_mask(std::size_t n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

struct PossibilitySpace::Impl {
  std::vector<std::string> labels;
  std::map<std::string, std::size_t, std::less<>> index;
};

PossibilitySpace::PossibilitySpace(std::vector<std::string> labels) {
  if (labels.empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                "a possibility space needs at least one state");
  }
  if (labels.size() > kMaxStates) {
    throw Error(ErrorKind::kInvalidArgument,
                "at most " + std::to_string(kMaxStates) + " states supported");
  }
  auto impl = std::make_shared<Impl>();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!impl->index.emplace(labels[i], i).second) {
      throw Error(ErrorKind::kDuplicateDefinition,
                  "state label '" + labels[i] + "' repeated");
    }
  }
  impl->labels = std::move(labels);
  impl_ = std::move(impl);
}

std::size_t PossibilitySpace::size() const { return impl_->labels.size(); }

const std::string& PossibilitySpace::label(std::size_t index) const {
  return impl_->labels.at(index);
}

const std::vector<std::string>& PossibilitySpace::labels() const {
  return impl_->labels;
}

std::optional<std::size_t> PossibilitySpace::index_of(
    std::string_view label) const {
  auto it = impl_->index.find(label);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

Event PossibilitySpace::all() const {
  return Event(*this, full_mask(size()));
}

Event PossibilitySpace::none() const { return Event(*this, 0); }

Event PossibilitySpace::singleton(std::size_t index) const {
  if (index >= size()) {
    throw Error(ErrorKind::kInvalidArgument, "state index out of range");
  }
  return Event(*this, std::uint64_t{1} << index);
}

Event PossibilitySpace::from_indices(
    std::initializer_list<std::size_t> indices) const {
  return from_indices(std::span<const std::size_t>(indices.begin(), indices.size()));
}

Event PossibilitySpace::from_indices(std::span<const std::size_t> indices) const {
  std::uint64_t bits = 0;
  for (std::size_t i : indices) {
    if (i >= size()) {
      throw Error(ErrorKind::kInvalidArgument, "state index out of range");
    }
    bits |= std::uint64_t{1} << i;
  }
  return Event(*this, bits);
}

Event PossibilitySpace::from_bits(std::uint64_t bits) const {
  return Event(*this, bits);
}

bool operator==(const PossibilitySpace& a, const PossibilitySpace& b) {
  return a.impl_ == b.impl_ || a.impl_->labels == b.impl_->labels;
}

Event::Event(PossibilitySpace space, std::uint64_t bits)
    : space_(std::move(space)), bits_(bits) {
  if ((bits_ & ~full_mask(space_.size())) != 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "event mentions states outside its space");
  }
}

bool Event::is_full() const { return bits_ == full_mask(space_.size()); }

std::size_t Event::count() const {
  return static_cast<std::size_t>(std::popcount(bits_));
}

std::vector<std::size_t> Event::states() const {
  std::vector<std::size_t> out;
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

void Event::require_same_space(const Event& other) const {
  if (!(space_ == other.space_)) {
    throw Error(ErrorKind::kSpaceMismatch,
                "events belong to different possibility spaces");
  }
}

Event Event::complement() const {
  return Event(space_, full_mask(space_.size()) & ~bits_);
}

Event Event::operator&(const Event& other) const {
  require_same_space(other);
  return Event(space_, bits_ & other.bits_);
}

Event Event::operator|(const Event& other) const {
  require_same_space(other);
  return Event(space_, bits_ | other.bits_);
}

Event Event::operator-(const Event& other) const {
  require_same_space(other);
  return Event(space_, bits_ & ~other.bits_);
}

bool Event::is_subset_of(const Event& other) const {
  require_same_space(other);
  return (bits_ & ~other.bits_) == 0;
}

bool Event::intersects(const Event& other) const {
  require_same_space(other);
  return (bits_ & other.bits_) != 0;
}

std::string Event::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : states()) {
    if (!first) out += ",";
    out += space_.label(i);
    first = false;
  }
  return out + "}";
}

bool operator==(const Event& a, const Event& b) {
  return a.bits_ == b.bits_ && a.space_ == b.space_;
}

bool is_partition(std::span<const Event> events) {
  if (events.empty()) return false;
  std::uint64_t seen = 0;
  for (const Event& e : events) {
    if (!(e.space() == events.front().space())) return false;
    if (e.empty() || (seen & e.bits()) != 0) return false;
    seen |= e.bits();
  }
  return seen == full_mask(events.front().space().size());
}

void require_partition(std::span<const Event> events, std::string_view where) {
  if (!is_partition(events)) {
    throw Error(ErrorKind::kNotAPartition,
                std::string(where) + ": events do not partition the space");
  }
}

}  // namespace choicetree
