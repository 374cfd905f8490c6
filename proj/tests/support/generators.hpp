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

// Seeded generators for property tests: raw pair lists, workspaces and
// expression trees.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "softset/expr.hpp"
#include "softset/laws.hpp"
#include "softset/soft_set.hpp"
#include "softset/workspace.hpp"

namespace softset::testing {

inline std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

// Raw (parameter, objects) pairs over distinct parameters, some with empty
// object lists and some with repeated objects.
inline std::vector<NamedPair> random_pairs(const Context& ctx, std::mt19937_64& rng) {
  std::vector<NamedPair> pairs;
  for (std::size_t p = 0; p < ctx.parameter_count(); ++p) {
    if (rng() % 3 == 0) continue;
    std::vector<std::string> objects;
    if (rng() % 3 != 0) {
      for (std::size_t o = 0; o < ctx.object_count(); ++o) {
        if (rng() % 2 == 0) objects.push_back(ctx.object(o));
      }
      if (!objects.empty() && rng() % 4 == 0) objects.push_back(objects.front());
    }
    pairs.emplace_back(ctx.parameter(p), std::move(objects));
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  return pairs;
}

inline std::string random_identifier(std::mt19937_64& rng, std::string_view prefix) {
  static constexpr std::string_view kChars = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_.-";
  std::string out(prefix);
  const std::size_t extra = pick(rng, 0, 4);
  for (std::size_t i = 0; i < extra; ++i) out += kChars[rng() % kChars.size()];
  return out;
}

inline io::Workspace random_workspace(std::mt19937_64& rng) {
  const std::size_t n = pick(rng, 0, 9);
  const std::size_t m = n == 0 ? 0 : pick(rng, 0, 9);
  std::vector<std::string> objects;
  std::vector<std::string> parameters;
  for (std::size_t i = 0; i < n; ++i) objects.push_back(random_identifier(rng, "h" + std::to_string(i) + "_"));
  for (std::size_t i = 0; i < m; ++i) parameters.push_back(random_identifier(rng, "e" + std::to_string(i) + "_"));
  std::shuffle(objects.begin(), objects.end(), rng);
  std::shuffle(parameters.begin(), parameters.end(), rng);
  io::Workspace ws(Context::create(objects, parameters));
  const std::size_t bindings = pick(rng, 0, 4);
  for (std::size_t b = 0; b < bindings; ++b) {
    const double defined = static_cast<double>(pick(rng, 0, 10)) / 10.0;
    const double member = static_cast<double>(pick(rng, 1, 10)) / 10.0;
    ws.bind("S" + std::to_string(b), laws::random_soft_set(ws.context(), rng, defined, member));
  }
  return ws;
}

inline expr::ExprPtr random_expr(std::mt19937_64& rng, int depth, const std::vector<std::string>& names) {
  const std::size_t choice = depth <= 0 ? pick(rng, 0, 2) : pick(rng, 0, 6);
  switch (choice) {
    case 0: return expr::Expr::name(names[rng() % names.size()]);
    case 1: return rng() % 4 == 0 ? expr::Expr::empty() : expr::Expr::name(names[rng() % names.size()]);
    case 2: return rng() % 4 == 0 ? expr::Expr::universal() : expr::Expr::name(names[rng() % names.size()]);
    case 3: return expr::Expr::complement(random_expr(rng, depth - 1, names));
    case 4: return expr::Expr::intersect(random_expr(rng, depth - 1, names), random_expr(rng, depth - 1, names));
    case 5: return expr::Expr::unite(random_expr(rng, depth - 1, names), random_expr(rng, depth - 1, names));
    default:
      return expr::Expr::difference(random_expr(rng, depth - 1, names), random_expr(rng, depth - 1, names));
  }
}

}  // namespace softset::testing
