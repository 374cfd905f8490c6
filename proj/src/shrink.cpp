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

#include <optional>

#include "softset/laws.hpp"

namespace softset::laws {
namespace {

// A reduced tuple if the reduction is applicable and still violates.
using Attempt = std::optional<Counterexample>;

Attempt accept_if_violating(const Law& law, Context context, std::vector<SoftSet> arguments) {
  const CheckResult result = law(context, arguments);
  if (!result.violated()) return std::nullopt;
  return Counterexample{std::move(context), std::move(arguments), result.detail};
}

Attempt drop_parameter_from_space(const Law& law, const Counterexample& cx, std::size_t dropped) {
  std::vector<std::string> parameters = cx.context.parameters();
  parameters.erase(parameters.begin() + static_cast<std::ptrdiff_t>(dropped));
  Context reduced = Context::create(cx.context.objects(), std::move(parameters));
  std::vector<SoftSet> arguments;
  for (const SoftSet& s : cx.arguments) {
    std::vector<Entry> entries;
    for (const Entry& e : s.entries()) {
      if (e.parameter == dropped) continue;
      entries.push_back(Entry{e.parameter > dropped ? e.parameter - 1 : e.parameter, e.objects});
    }
    arguments.push_back(SoftSet::from_entries(reduced, std::move(entries)));
  }
  return accept_if_violating(law, std::move(reduced), std::move(arguments));
}

Attempt undefine_parameter(const Law& law, const Counterexample& cx, std::size_t arg, std::size_t entry) {
  std::vector<SoftSet> arguments = cx.arguments;
  auto entries = arguments[arg].entries();
  std::vector<Entry> kept;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i != entry) kept.push_back(entries[i]);
  }
  arguments[arg] = SoftSet::from_entries(cx.context, std::move(kept));
  return accept_if_violating(law, cx.context, std::move(arguments));
}

Attempt drop_object_from_universe(const Law& law, const Counterexample& cx, std::size_t dropped) {
  std::vector<std::string> objects = cx.context.objects();
  objects.erase(objects.begin() + static_cast<std::ptrdiff_t>(dropped));
  if (objects.empty() && cx.context.parameter_count() > 0) return std::nullopt;
  Context reduced = Context::create(std::move(objects), cx.context.parameters());
  std::vector<SoftSet> arguments;
  for (const SoftSet& s : cx.arguments) {
    std::vector<Entry> entries;
    for (const Entry& e : s.entries()) {
      entries.push_back(Entry{e.parameter, e.objects.without_object(dropped)});
    }
    // Images that become empty are dropped by the normalizing constructor.
    arguments.push_back(SoftSet::from_entries(reduced, std::move(entries)));
  }
  return accept_if_violating(law, std::move(reduced), std::move(arguments));
}

Attempt remove_object_from_image(const Law& law, const Counterexample& cx, std::size_t arg,
                                 std::size_t entry, std::size_t object) {
  std::vector<SoftSet> arguments = cx.arguments;
  auto source = arguments[arg].entries();
  std::vector<Entry> entries(source.begin(), source.end());
  entries[entry].objects.erase(object);
  arguments[arg] = SoftSet::from_entries(cx.context, std::move(entries));
  return accept_if_violating(law, cx.context, std::move(arguments));
}

Attempt first_improvement(const Law& law, const Counterexample& cx) {
  for (std::size_t p = 0; p < cx.context.parameter_count(); ++p) {
    if (auto next = drop_parameter_from_space(law, cx, p)) return next;
  }
  for (std::size_t a = 0; a < cx.arguments.size(); ++a) {
    for (std::size_t e = 0; e < cx.arguments[a].size(); ++e) {
      if (auto next = undefine_parameter(law, cx, a, e)) return next;
    }
  }
  for (std::size_t o = 0; o < cx.context.object_count(); ++o) {
    if (auto next = drop_object_from_universe(law, cx, o)) return next;
  }
  for (std::size_t a = 0; a < cx.arguments.size(); ++a) {
    const auto entries = cx.arguments[a].entries();
    for (std::size_t e = 0; e < entries.size(); ++e) {
      if (entries[e].objects.count() < 2) continue;
      for (std::size_t o : entries[e].objects.indices()) {
        if (auto next = remove_object_from_image(law, cx, a, e, o)) return next;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Counterexample shrink(const Law& law, Counterexample violating) {
  // Every accepted step strictly shrinks |E| + |U| + the total size of all
  // assignments, so the loop terminates.
  while (auto next = first_improvement(law, violating)) violating = std::move(*next);
  return violating;
}

}  // namespace softset::laws
