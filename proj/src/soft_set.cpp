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

#include "softset/soft_set.hpp"

#include <algorithm>

#include "softset/error.hpp"

namespace softset {

SoftSet SoftSet::from_entries(const Context& context, std::vector<Entry> entries) {
  for (const Entry& e : entries) {
    if (e.parameter >= context.parameter_count()) {
      throw Error(ErrorKind::kUnknownParameter,
                  "parameter index " + std::to_string(e.parameter) + " outside the context");
    }
    if (e.objects.universe_size() != context.object_count()) {
      throw Error(ErrorKind::kUnknownObject, "image built over a different universe");
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.parameter < b.parameter; });
  auto dup = std::adjacent_find(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.parameter == b.parameter;
  });
  if (dup != entries.end()) {
    throw Error(ErrorKind::kDuplicateParameter,
                "parameter '" + context.parameter(dup->parameter) + "' assigned twice");
  }
  std::erase_if(entries, [](const Entry& e) { return e.objects.empty(); });
  return SoftSet(context, std::move(entries));
}

bool SoftSet::is_universal() const {
  return entries_.size() == context_.parameter_count() &&
         std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.objects.is_full(); });
}

const ObjectSet* SoftSet::image_at(std::size_t parameter) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), parameter,
                             [](const Entry& e, std::size_t p) { return e.parameter < p; });
  if (it == entries_.end() || it->parameter != parameter) return nullptr;
  return &it->objects;
}

std::vector<std::size_t> SoftSet::domain_indices() const {
  std::vector<std::size_t> out;
  out.reserve(entries_.size());
  for (const Entry& e : entries_) out.push_back(e.parameter);
  return out;
}

std::vector<std::string> SoftSet::domain() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const Entry& e : entries_) out.push_back(context_.parameter(e.parameter));
  return out;
}

std::optional<std::vector<std::string>> SoftSet::image(std::string_view parameter) const {
  const ObjectSet* objects = image_at(context_.parameter_index(parameter));
  if (objects == nullptr) return std::nullopt;
  return context_.object_names(*objects);
}

bool operator==(const SoftSet& a, const SoftSet& b) {
  return a.context_ == b.context_ && a.entries_ == b.entries_;
}

namespace {

SoftSet build(const Context& context, std::span<const NamedPair> pairs, bool strict) {
  std::vector<Entry> entries;
  entries.reserve(pairs.size());
  for (const auto& [parameter, objects] : pairs) {
    const std::size_t p = context.parameter_index(parameter);
    if (strict && objects.empty()) {
      throw Error(ErrorKind::kEmptyImage, "parameter '" + parameter + "' has an empty image");
    }
    entries.push_back(Entry{p, context.make_objects(objects)});
  }
  return SoftSet::from_entries(context, std::move(entries));
}

}  // namespace

SoftSet soft_set(const Context& context, std::span<const NamedPair> pairs) {
  return build(context, pairs, /*strict=*/false);
}

SoftSet strict_soft_set(const Context& context, std::span<const NamedPair> pairs) {
  return build(context, pairs, /*strict=*/true);
}

SoftSet empty_soft_set(const Context& context) { return SoftSet::from_entries(context, {}); }

SoftSet universal_soft_set(const Context& context) {
  std::vector<Entry> entries;
  entries.reserve(context.parameter_count());
  for (std::size_t p = 0; p < context.parameter_count(); ++p) {
    entries.push_back(Entry{p, context.universe()});
  }
  return SoftSet::from_entries(context, std::move(entries));
}

}  // namespace softset
