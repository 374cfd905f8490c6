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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "softset/kernels.hpp"

namespace softset {

// A subset of a universe of `universe_size` objects, addressed by object
// index. Bits past universe_size are always zero.
class ObjectSet {
 public:
  using Word = kernels::Word;
  static constexpr std::size_t kWordBits = 64;

  ObjectSet() = default;
  explicit ObjectSet(std::size_t universe_size);

  static ObjectSet full(std::size_t universe_size);
  // Low `universe_size` bits of `mask`; requires universe_size <= 64.
  static ObjectSet from_mask(std::size_t universe_size, Word mask);
  static ObjectSet from_indices(std::size_t universe_size, std::span<const std::size_t> indices);

  std::size_t universe_size() const { return universe_size_; }
  std::span<const Word> words() const { return words_; }

  void insert(std::size_t index);
  void erase(std::size_t index);
  bool contains(std::size_t index) const;

  bool empty() const;
  bool is_full() const;
  std::size_t count() const;
  bool intersects(const ObjectSet& other) const;
  bool is_subset_of(const ObjectSet& other) const;
  std::vector<std::size_t> indices() const;

  ObjectSet operator&(const ObjectSet& other) const;
  ObjectSet operator|(const ObjectSet& other) const;
  // Set difference: members of *this not in other.
  ObjectSet operator-(const ObjectSet& other) const;
  // Complement relative to the universe.
  ObjectSet complement() const;

  // Same universe with object `index` removed and higher indices shifted down.
  ObjectSet without_object(std::size_t index) const;

  friend bool operator==(const ObjectSet& a, const ObjectSet& b);

 private:
  static std::size_t word_count(std::size_t universe_size) {
    return (universe_size + kWordBits - 1) / kWordBits;
  }
  void clear_tail();

  std::size_t universe_size_ = 0;
  std::vector<Word> words_;
};

}  // namespace softset
