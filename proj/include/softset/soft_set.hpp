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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "softset/context.hpp"
#include "softset/object_set.hpp"

namespace softset {

// One defined parameter of a soft set and its (nonempty) image.
struct Entry {
  std::size_t parameter;
  ObjectSet objects;

  friend bool operator==(const Entry&, const Entry&) = default;
};

// A raw (parameter, objects) pair as written by users.
using NamedPair = std::pair<std::string, std::vector<std::string>>;

// A soft set (F, A) over a context: a partial map from parameters to
// nonempty object sets. Immutable; entries are kept sorted by parameter
// index and every image is nonempty.
class SoftSet {
 public:
  // The empty soft set over the empty context.
  SoftSet() = default;

  // Normalizing constructor over index-level entries: entries with an empty
  // image are dropped. Throws UnknownParameter for an out-of-range index and
  // DuplicateParameter if an index repeats.
  static SoftSet from_entries(const Context& context, std::vector<Entry> entries);

  const Context& context() const { return context_; }
  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  bool is_empty() const { return entries_.empty(); }
  bool is_universal() const;
  bool defines(std::size_t parameter) const { return image_at(parameter) != nullptr; }

  // nullptr when the parameter is undefined (outside the domain).
  const ObjectSet* image_at(std::size_t parameter) const;

  std::vector<std::size_t> domain_indices() const;
  std::vector<std::string> domain() const;
  // nullopt means "undefined"; throws UnknownParameter if name is not in E.
  std::optional<std::vector<std::string>> image(std::string_view parameter) const;

  // Structural identity (same context, same assignment). Coincides with
  // algebra::equals, which is defined through mutual inclusion.
  friend bool operator==(const SoftSet& a, const SoftSet& b);

 private:
  SoftSet(Context context, std::vector<Entry> entries)
      : context_(std::move(context)), entries_(std::move(entries)) {}

  Context context_;
  std::vector<Entry> entries_;
};

// Normalizing constructor: pairs whose object list is empty are dropped.
// Throws UnknownParameter, UnknownObject, DuplicateParameter.
SoftSet soft_set(const Context& context, std::span<const NamedPair> pairs);
// Strict constructor: an empty object list is an EmptyImage error.
SoftSet strict_soft_set(const Context& context, std::span<const NamedPair> pairs);

SoftSet empty_soft_set(const Context& context);
SoftSet universal_soft_set(const Context& context);

inline bool is_empty(const SoftSet& s) { return s.is_empty(); }
inline bool is_universal(const SoftSet& s) { return s.is_universal(); }
inline std::vector<std::string> domain(const SoftSet& s) { return s.domain(); }
inline std::optional<std::vector<std::string>> image(const SoftSet& s, std::string_view parameter) {
  return s.image(parameter);
}

}  // namespace softset
