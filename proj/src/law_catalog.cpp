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

#include <algorithm>
#include <stdexcept>

#include "softset/algebra.hpp"
#include "softset/laws.hpp"
#include "softset/workspace.hpp"

namespace softset::laws {

CheckResult Law::operator()(const Context& context, std::span<const SoftSet> args) const {
  if (args.size() != static_cast<std::size_t>(arity)) {
    throw std::invalid_argument("law '" + id + "' expects " + std::to_string(arity) + " arguments");
  }
  return check(context, args);
}

namespace {

using algebra::complement;
using algebra::difference;
using algebra::equals;
using algebra::intersection;
using algebra::is_subset;
using algebra::union_of;

CheckResult expect_equal(const SoftSet& lhs, const SoftSet& rhs) {
  if (equals(lhs, rhs)) return CheckResult::holds();
  return CheckResult::violated("lhs = " + io::render_inline(lhs) + " but rhs = " + io::render_inline(rhs));
}

CheckResult expect_iff(bool left, bool right, std::string_view left_text, std::string_view right_text) {
  if (left == right) return CheckResult::holds();
  auto word = [](bool b) { return b ? "true" : "false"; };
  return CheckResult::violated(std::string(left_text) + " is " + word(left) + " but " +
                               std::string(right_text) + " is " + word(right));
}

Law unary(std::string id, std::string statement,
          std::function<CheckResult(const Context&, const SoftSet&)> body) {
  return Law{std::move(id), 1, std::move(statement),
             [body = std::move(body)](const Context& ctx, std::span<const SoftSet> a) {
               return body(ctx, a[0]);
             }};
}

Law binary(std::string id, std::string statement,
           std::function<CheckResult(const Context&, const SoftSet&, const SoftSet&)> body) {
  return Law{std::move(id), 2, std::move(statement),
             [body = std::move(body)](const Context& ctx, std::span<const SoftSet> a) {
               return body(ctx, a[0], a[1]);
             }};
}

Law ternary(std::string id, std::string statement,
            std::function<CheckResult(const SoftSet&, const SoftSet&, const SoftSet&)> body) {
  return Law{std::move(id), 3, std::move(statement),
             [body = std::move(body)](const Context&, std::span<const SoftSet> a) {
               return body(a[0], a[1], a[2]);
             }};
}

// Arguments are (s1, t1, s2, t2); the hypothesis is s1 ⊆ t1 and s2 ⊆ t2.
Law monotonicity(std::string id, std::string statement, SoftSet (*op)(const SoftSet&, const SoftSet&)) {
  return Law{std::move(id), 4, std::move(statement), [op](const Context&, std::span<const SoftSet> a) {
               if (!is_subset(a[0], a[1]) || !is_subset(a[2], a[3])) return CheckResult::vacuous();
               const SoftSet lhs = op(a[0], a[2]);
               const SoftSet rhs = op(a[1], a[3]);
               if (is_subset(lhs, rhs)) return CheckResult::holds();
               return CheckResult::violated(io::render_inline(lhs) + " is not a subset of " +
                                            io::render_inline(rhs));
             }};
}

std::vector<Law> build_catalog() {
  std::vector<Law> laws;

  laws.push_back(unary("identity-1", "s & UNIVERSAL = s", [](const Context& ctx, const SoftSet& s) {
    return expect_equal(intersection(s, universal_soft_set(ctx)), s);
  }));
  laws.push_back(unary("identity-2", "s | EMPTY = s", [](const Context& ctx, const SoftSet& s) {
    return expect_equal(union_of(s, empty_soft_set(ctx)), s);
  }));
  laws.push_back(unary("domination-1", "s & EMPTY = EMPTY", [](const Context& ctx, const SoftSet& s) {
    return expect_equal(intersection(s, empty_soft_set(ctx)), empty_soft_set(ctx));
  }));
  laws.push_back(unary("domination-2", "s | UNIVERSAL = UNIVERSAL", [](const Context& ctx, const SoftSet& s) {
    return expect_equal(union_of(s, universal_soft_set(ctx)), universal_soft_set(ctx));
  }));
  laws.push_back(unary("idempotent-1", "s & s = s", [](const Context&, const SoftSet& s) {
    return expect_equal(intersection(s, s), s);
  }));
  laws.push_back(unary("idempotent-2", "s | s = s", [](const Context&, const SoftSet& s) {
    return expect_equal(union_of(s, s), s);
  }));
  laws.push_back(binary("commutative-1", "s & t = t & s", [](const Context&, const SoftSet& s, const SoftSet& t) {
    return expect_equal(intersection(s, t), intersection(t, s));
  }));
  laws.push_back(binary("commutative-2", "s | t = t | s", [](const Context&, const SoftSet& s, const SoftSet& t) {
    return expect_equal(union_of(s, t), union_of(t, s));
  }));
  laws.push_back(ternary("associative-1", "(s & t) & u = s & (t & u)",
                         [](const SoftSet& s, const SoftSet& t, const SoftSet& u) {
                           return expect_equal(intersection(intersection(s, t), u),
                                               intersection(s, intersection(t, u)));
                         }));
  laws.push_back(ternary("associative-2", "(s | t) | u = s | (t | u)",
                         [](const SoftSet& s, const SoftSet& t, const SoftSet& u) {
                           return expect_equal(union_of(union_of(s, t), u), union_of(s, union_of(t, u)));
                         }));
  laws.push_back(ternary("distributive-1", "s & (t | u) = (s & t) | (s & u)",
                         [](const SoftSet& s, const SoftSet& t, const SoftSet& u) {
                           return expect_equal(intersection(s, union_of(t, u)),
                                               union_of(intersection(s, t), intersection(s, u)));
                         }));
  laws.push_back(ternary("distributive-2", "s | (t & u) = (s | t) & (s | u)",
                         [](const SoftSet& s, const SoftSet& t, const SoftSet& u) {
                           return expect_equal(union_of(s, intersection(t, u)),
                                               intersection(union_of(s, t), union_of(s, u)));
                         }));
  laws.push_back(unary("bounds", "EMPTY <= s <= UNIVERSAL", [](const Context& ctx, const SoftSet& s) {
    if (!is_subset(empty_soft_set(ctx), s)) return CheckResult::violated("EMPTY is not a subset of s");
    if (!is_subset(s, universal_soft_set(ctx))) return CheckResult::violated("s is not a subset of UNIVERSAL");
    return CheckResult::holds();
  }));
  laws.push_back(monotonicity("monotonicity-cap", "s1 <= t1 and s2 <= t2 imply s1 & s2 <= t1 & t2",
                              &intersection));
  laws.push_back(monotonicity("monotonicity-cup", "s1 <= t1 and s2 <= t2 imply s1 | s2 <= t1 | t2",
                              &union_of));
  laws.push_back(binary("subset-iff-cap", "s <= t iff s & t = s",
                        [](const Context&, const SoftSet& s, const SoftSet& t) {
                          return expect_iff(is_subset(s, t), equals(intersection(s, t), s), "s <= t",
                                            "s & t = s");
                        }));
  laws.push_back(binary("subset-iff-cup", "s <= t iff s | t = t",
                        [](const Context&, const SoftSet& s, const SoftSet& t) {
                          return expect_iff(is_subset(s, t), equals(union_of(s, t), t), "s <= t",
                                            "s | t = t");
                        }));
  laws.push_back(binary("complement-characterization-fwd",
                        "t = s^c implies s & t = EMPTY and s | t = UNIVERSAL",
                        [](const Context& ctx, const SoftSet& s, const SoftSet& t) {
                          if (!equals(t, complement(s))) return CheckResult::vacuous();
                          if (!is_empty(intersection(s, t))) {
                            return CheckResult::violated("s & t = " + io::render_inline(intersection(s, t)));
                          }
                          if (!equals(union_of(s, t), universal_soft_set(ctx))) {
                            return CheckResult::violated("s | t = " + io::render_inline(union_of(s, t)));
                          }
                          return CheckResult::holds();
                        }));
  laws.push_back(binary("complement-characterization-bwd",
                        "s & t = EMPTY and s | t = UNIVERSAL imply t = s^c",
                        [](const Context& ctx, const SoftSet& s, const SoftSet& t) {
                          if (!is_empty(intersection(s, t)) || !equals(union_of(s, t), universal_soft_set(ctx))) {
                            return CheckResult::vacuous();
                          }
                          return expect_equal(t, complement(s));
                        }));
  laws.push_back(unary("involution", "(s^c)^c = s", [](const Context&, const SoftSet& s) {
    return expect_equal(complement(complement(s)), s);
  }));
  laws.push_back(binary("demorgan-1", "(s & t)^c = s^c | t^c",
                        [](const Context&, const SoftSet& s, const SoftSet& t) {
                          return expect_equal(complement(intersection(s, t)),
                                              union_of(complement(s), complement(t)));
                        }));
  laws.push_back(binary("demorgan-2", "(s | t)^c = s^c & t^c",
                        [](const Context&, const SoftSet& s, const SoftSet& t) {
                          return expect_equal(complement(union_of(s, t)),
                                              intersection(complement(s), complement(t)));
                        }));
  laws.push_back(binary("difference-as-intersection", "s - t = s & t^c",
                        [](const Context&, const SoftSet& s, const SoftSet& t) {
                          return expect_equal(difference(s, t), intersection(s, complement(t)));
                        }));
  laws.push_back(unary("complement-as-difference", "s^c = UNIVERSAL - s",
                       [](const Context& ctx, const SoftSet& s) {
                         return expect_equal(complement(s), difference(universal_soft_set(ctx), s));
                       }));
  return laws;
}

}  // namespace

const std::vector<Law>& law_catalog() {
  static const std::vector<Law> catalog = build_catalog();
  return catalog;
}

const Law* find_law(std::string_view id) {
  const auto& catalog = law_catalog();
  auto it = std::find_if(catalog.begin(), catalog.end(), [&](const Law& law) { return law.id == id; });
  return it == catalog.end() ? nullptr : &*it;
}

}  // namespace softset::laws
