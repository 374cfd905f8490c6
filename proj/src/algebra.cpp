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

#include "softset/algebra.hpp"

#include "softset/error.hpp"

namespace softset::algebra {
namespace {

void require_same_context(const SoftSet& s, const SoftSet& t) {
  if (!(s.context() == t.context())) {
    throw Error(ErrorKind::kContextMismatch, "soft sets belong to different contexts");
  }
}

// Walks the sorted entry lists of two soft sets in parameter order, calling
// visit(parameter, left image or nullptr, right image or nullptr) for every
// parameter in A ∪ B.
template <typename Visit>
void merge_walk(const SoftSet& s, const SoftSet& t, Visit&& visit) {
  auto a = s.entries();
  auto b = t.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].parameter < b[j].parameter)) {
      visit(a[i].parameter, &a[i].objects, nullptr);
      ++i;
    } else if (i == a.size() || b[j].parameter < a[i].parameter) {
      visit(b[j].parameter, nullptr, &b[j].objects);
      ++j;
    } else {
      visit(a[i].parameter, &a[i].objects, &b[j].objects);
      ++i;
      ++j;
    }
  }
}

}  // namespace

bool is_subset(const SoftSet& s, const SoftSet& t) {
  require_same_context(s, t);
  for (const Entry& e : s.entries()) {
    const ObjectSet* other = t.image_at(e.parameter);
    if (other == nullptr || !e.objects.is_subset_of(*other)) return false;
  }
  return true;
}

bool equals(const SoftSet& s, const SoftSet& t) { return is_subset(s, t) && is_subset(t, s); }

SoftSet intersection(const SoftSet& s, const SoftSet& t) {
  require_same_context(s, t);
  std::vector<Entry> out;
  merge_walk(s, t, [&](std::size_t p, const ObjectSet* f, const ObjectSet* g) {
    if (f != nullptr && g != nullptr && f->intersects(*g)) out.push_back(Entry{p, *f & *g});
  });
  return SoftSet::from_entries(s.context(), std::move(out));
}

SoftSet union_of(const SoftSet& s, const SoftSet& t) {
  require_same_context(s, t);
  std::vector<Entry> out;
  merge_walk(s, t, [&](std::size_t p, const ObjectSet* f, const ObjectSet* g) {
    if (g == nullptr) {
      out.push_back(Entry{p, *f});
    } else if (f == nullptr) {
      out.push_back(Entry{p, *g});
    } else {
      out.push_back(Entry{p, *f | *g});
    }
  });
  return SoftSet::from_entries(s.context(), std::move(out));
}

SoftSet complement(const SoftSet& s) {
  const Context& ctx = s.context();
  std::vector<Entry> out;
  for (std::size_t p = 0; p < ctx.parameter_count(); ++p) {
    const ObjectSet* f = s.image_at(p);
    if (f == nullptr) {
      out.push_back(Entry{p, ctx.universe()});
    } else if (!f->is_full()) {
      out.push_back(Entry{p, f->complement()});
    }
  }
  return SoftSet::from_entries(ctx, std::move(out));
}

SoftSet difference(const SoftSet& s, const SoftSet& t) {
  require_same_context(s, t);
  std::vector<Entry> out;
  merge_walk(s, t, [&](std::size_t p, const ObjectSet* f, const ObjectSet* g) {
    if (f == nullptr) return;
    if (g == nullptr) {
      out.push_back(Entry{p, *f});
    } else if (!f->is_subset_of(*g)) {
      out.push_back(Entry{p, *f - *g});
    }
  });
  return SoftSet::from_entries(s.context(), std::move(out));
}

}  // namespace softset::algebra
