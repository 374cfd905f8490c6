// Copyright 2026 The Softset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "softset/object_set.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace softset {

ObjectSet::ObjectSet(std::size_t universe_size)
    : universe_size_(universe_size), words_(word_count(universe_size), 0) {}

ObjectSet ObjectSet::full(std::size_t universe_size) {
  ObjectSet s(universe_size);
  for (Word& w : s.words_) w = ~Word{0};
  s.clear_tail();
  return s;
}

ObjectSet ObjectSet::from_mask(std::size_t universe_size, Word mask) {
  if (universe_size > kWordBits) throw std::invalid_argument("from_mask: universe wider than one word");
  ObjectSet s(universe_size);
  if (universe_size > 0) s.words_[0] = mask;
  s.clear_tail();
  return s;
}

ObjectSet ObjectSet::from_indices(std::size_t universe_size, std::span<const std::size_t> indices) {
  ObjectSet s(universe_size);
  for (std::size_t i : indices) s.insert(i);
  return s;
}

void ObjectSet::clear_tail() {
  const std::size_t rem = universe_size_ % kWordBits;
  if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
}

void ObjectSet::insert(std::size_t index) {
  if (index >= universe_size_) throw std::out_of_range("ObjectSet::insert: index outside universe");
  words_[index / kWordBits] |= Word{1} << (index % kWordBits);
}

void ObjectSet::erase(std::size_t index) {
  if (index >= universe_size_) throw std::out_of_range("ObjectSet::erase: index outside universe");
  words_[index / kWordBits] &= ~(Word{1} << (index % kWordBits));
}

bool ObjectSet::contains(std::size_t index) const {
  if (index >= universe_size_) return false;
  return (words_[index / kWordBits] >> (index % kWordBits)) & 1U;
}

bool ObjectSet::empty() const { return !kernels::active().any(words_); }

bool ObjectSet::is_full() const { return count() == universe_size_; }

std::size_t ObjectSet::count() const { return kernels::active().popcount(words_); }

bool ObjectSet::intersects(const ObjectSet& other) const {
  assert(universe_size_ == other.universe_size_);
  return kernels::active().intersects(words_, other.words_);
}

bool ObjectSet::is_subset_of(const ObjectSet& other) const {
  assert(universe_size_ == other.universe_size_);
  return kernels::active().is_subset(words_, other.words_);
}

std::vector<std::size_t> ObjectSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word bits = words_[w];
    while (bits != 0) {
      const int bit = std::countr_zero(bits);
      out.push_back(w * kWordBits + static_cast<std::size_t>(bit));
      bits &= bits - 1;
    }
  }
  return out;
}

ObjectSet ObjectSet::operator&(const ObjectSet& other) const {
  assert(universe_size_ == other.universe_size_);
  ObjectSet out(universe_size_);
  kernels::active().bit_and(words_, other.words_, out.words_);
  return out;
}

ObjectSet ObjectSet::operator|(const ObjectSet& other) const {
  assert(universe_size_ == other.universe_size_);
  ObjectSet out(universe_size_);
  kernels::active().bit_or(words_, other.words_, out.words_);
  return out;
}

ObjectSet ObjectSet::operator-(const ObjectSet& other) const {
  assert(universe_size_ == other.universe_size_);
  ObjectSet out(universe_size_);
  kernels::active().bit_andnot(words_, other.words_, out.words_);
  return out;
}

ObjectSet ObjectSet::complement() const { return full(universe_size_) - *this; }

ObjectSet ObjectSet::without_object(std::size_t index) const {
  if (index >= universe_size_) throw std::out_of_range("ObjectSet::without_object: index outside universe");
  ObjectSet out(universe_size_ - 1);
  for (std::size_t i : indices()) {
    if (i < index) out.insert(i);
    else if (i > index) out.insert(i - 1);
  }
  return out;
}

bool operator==(const ObjectSet& a, const ObjectSet& b) {
  return a.universe_size_ == b.universe_size_ && kernels::active().equal(a.words_, b.words_);
}

}  // namespace softset
