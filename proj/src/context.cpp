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

#include "softset/context.hpp"

#include <unordered_map>

#include "softset/error.hpp"

namespace softset {

struct Context::Data {
  std::vector<std::string> objects;
  std::vector<std::string> parameters;
  std::unordered_map<std::string, std::size_t> object_index;
  std::unordered_map<std::string, std::size_t> parameter_index;
};

namespace {

std::unordered_map<std::string, std::size_t> index_names(const std::vector<std::string>& names,
                                                         std::string_view what) {
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) {
      throw Error(ErrorKind::kBadIdentifier, std::string("empty ") + std::string(what) + " identifier");
    }
    if (!index.emplace(names[i], i).second) {
      throw Error(ErrorKind::kDuplicateIdentifier,
                  "duplicate " + std::string(what) + " '" + names[i] + "'");
    }
  }
  return index;
}

}  // namespace

Context::Context() {
  static const auto empty = std::make_shared<const Data>();
  data_ = empty;
}

Context::Context(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

Context Context::create(std::vector<std::string> objects, std::vector<std::string> parameters) {
  auto data = std::make_shared<Data>();
  data->object_index = index_names(objects, "object");
  data->parameter_index = index_names(parameters, "parameter");
  if (objects.empty() && !parameters.empty()) {
    throw Error(ErrorKind::kEmptyUniverse, "a nonempty parameter space needs a nonempty universe");
  }
  data->objects = std::move(objects);
  data->parameters = std::move(parameters);
  return Context(std::move(data));
}

std::size_t Context::object_count() const { return data_->objects.size(); }
std::size_t Context::parameter_count() const { return data_->parameters.size(); }
const std::vector<std::string>& Context::objects() const { return data_->objects; }
const std::vector<std::string>& Context::parameters() const { return data_->parameters; }
const std::string& Context::object(std::size_t index) const { return data_->objects.at(index); }
const std::string& Context::parameter(std::size_t index) const { return data_->parameters.at(index); }

std::optional<std::size_t> Context::find_object(std::string_view name) const {
  auto it = data_->object_index.find(std::string(name));
  if (it == data_->object_index.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Context::find_parameter(std::string_view name) const {
  auto it = data_->parameter_index.find(std::string(name));
  if (it == data_->parameter_index.end()) return std::nullopt;
  return it->second;
}

std::size_t Context::object_index(std::string_view name) const {
  if (auto i = find_object(name)) return *i;
  throw Error(ErrorKind::kUnknownObject, "unknown object '" + std::string(name) + "'");
}

std::size_t Context::parameter_index(std::string_view name) const {
  if (auto i = find_parameter(name)) return *i;
  throw Error(ErrorKind::kUnknownParameter, "unknown parameter '" + std::string(name) + "'");
}

ObjectSet Context::make_objects(std::span<const std::string> names) const {
  ObjectSet set(object_count());
  for (const auto& name : names) set.insert(object_index(name));
  return set;
}

std::vector<std::string> Context::object_names(const ObjectSet& set) const {
  std::vector<std::string> names;
  for (std::size_t i : set.indices()) names.push_back(data_->objects[i]);
  return names;
}

bool operator==(const Context& a, const Context& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->objects == b.data_->objects && a.data_->parameters == b.data_->parameters;
}

}  // namespace softset
