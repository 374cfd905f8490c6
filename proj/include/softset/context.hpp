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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "softset/object_set.hpp"

namespace softset {

// The shared frame every soft set refers to: a finite ordered universe of
// objects and a finite ordered parameter space. Declaration order is the
// canonical order used for rendering. Copies share the same immutable data.
class Context {
 public:
  // The empty context (no objects, no parameters).
  Context();

  // Throws DuplicateIdentifier, BadIdentifier (empty name) or EmptyUniverse
  // (parameters without objects).
  static Context create(std::vector<std::string> objects, std::vector<std::string> parameters);

  std::size_t object_count() const;
  std::size_t parameter_count() const;
  const std::vector<std::string>& objects() const;
  const std::vector<std::string>& parameters() const;
  const std::string& object(std::size_t index) const;
  const std::string& parameter(std::size_t index) const;

  std::optional<std::size_t> find_object(std::string_view name) const;
  std::optional<std::size_t> find_parameter(std::string_view name) const;
  // Like find_*, but throw UnknownObject / UnknownParameter.
  std::size_t object_index(std::string_view name) const;
  std::size_t parameter_index(std::string_view name) const;

  ObjectSet universe() const { return ObjectSet::full(object_count()); }
  ObjectSet make_objects(std::span<const std::string> names) const;
  std::vector<std::string> object_names(const ObjectSet& set) const;

  // Structural equality: same identifiers in the same order.
  friend bool operator==(const Context& a, const Context& b);

 private:
  struct Data;
  explicit Context(std::shared_ptr<const Data> data);

  std::shared_ptr<const Data> data_;
};

}  // namespace softset
