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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "softset/algebra.hpp"
#include "softset/cli.hpp"
#include "softset/expr.hpp"
#include "softset/houses.hpp"
#include "softset/laws.hpp"
#include "softset/workspace.hpp"
#include "support/generators.hpp"
#include "support/matrix_oracle.hpp"
#include "support/mutants.hpp"

namespace {

using namespace softset;

struct Verdict {
  bool ok = true;
  std::string note;

  void require(bool condition, const std::string& why) {
    if (!condition && ok) {
      ok = false;
      note = why;
    }
  }
};

// Values transcribed from the published worked example; the difference at e2
// is the definitional value, the published one is {h2}.
const std::vector<std::pair<std::string, std::string>> kPublished = {
    {"F & G", "softset r:\n  e3: h2 h4\n  e4: h1\n  e5: h2 h3 h4 h5\n  e7: h3\n"},
    {"F | G",
     "softset r:\n  e1: h3 h5\n  e2: h2 h3 h4 h5\n  e3: h2 h4\n  e4: h1\n  e5: h1 h2 h3 h4 h5\n  e6: h3\n"
     "  e7: h3 h5\n"},
    {"F^c",
     "softset r:\n  e1: h1 h2 h3 h4 h5\n  e2: h1 h4\n  e3: h1 h3 h5\n  e4: h2 h3 h4 h5\n"
     "  e6: h1 h2 h3 h4 h5\n  e7: h1 h2 h4\n  e8: h1 h2 h3 h4 h5\n"},
    {"F - G", "softset r:\n  e2: h2 h3 h5\n  e5: h1\n  e7: h5\n"},
};

Verdict ac1_paper_example() {
  Verdict v;
  const io::Workspace ws = houses::workspace();
  expr::Environment env;
  for (const auto& b : ws.bindings()) env.emplace(b.name, b.value);
  for (const auto& [text, expected] : kPublished) {
    const SoftSet value = expr::evaluate(*expr::parse(text), env, ws.context());
    v.require(io::render_soft_set("r", value) == expected, "mismatch for " + text);
  }
  const SoftSet diff = expr::evaluate(*expr::parse("F - G"), env, ws.context());
  v.require(io::render_inline(diff).find("e2: h2 h3 h5") != std::string::npos, "difference e2 not {h2 h3 h5}");

  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({"paper-example"}, out, err);
  v.require(code == cli::kSuccess, "paper-example exit code " + std::to_string(code));
  v.require(out.str().find("ERRATUM") != std::string::npos, "erratum note missing");
  for (const auto& outcome : houses::check_fixtures()) {
    v.require(outcome.matches, "fixture " + outcome.fixture->operation + " mismatched");
  }
  return v;
}

Verdict ac2_exhaustive_laws() {
  Verdict v;
  const auto& catalog = laws::law_catalog();
  v.require(catalog.size() >= 21, "catalog has fewer than 21 laws");
  v.require(laws::enumerate_soft_sets(laws::generated_context(2, 2)).size() == 16, "expected 16 soft sets at 2x2");
  v.require(laws::enumerate_soft_sets(laws::generated_context(3, 2)).size() == 64, "expected 64 soft sets at 3x2");
  const Context small = laws::generated_context(2, 2);
  const Context wider = laws::generated_context(3, 2);
  for (const auto& law : catalog) {
    const laws::CheckReport r = laws::check_exhaustive(law, small);
    v.require(r.passed(), law.id + " fails at 2x2");
    v.require(r.cases == laws::tuple_count(2, 2, law.arity), law.id + " skipped tuples at 2x2");
    if (law.arity <= 2) {
      const laws::CheckReport w = laws::check_exhaustive(law, wider);
      v.require(w.passed(), law.id + " fails at 3x2");
      v.require(w.cases == laws::tuple_count(3, 2, law.arity), law.id + " skipped tuples at 3x2");
    }
  }
  return v;
}

Verdict ac3_oracle() {
  using namespace softset::testing;
  Verdict v;
  std::uint64_t mismatches = 0;
  auto compare = [&](const SoftSet& s, const SoftSet& t) {
    const IncidenceMatrix a = encode(s);
    const IncidenceMatrix b = encode(t);
    mismatches += encode(algebra::intersection(s, t)) != oracle_intersection(a, b);
    mismatches += encode(algebra::union_of(s, t)) != oracle_union(a, b);
    mismatches += encode(algebra::complement(s)) != oracle_complement(a);
    mismatches += encode(algebra::difference(s, t)) != oracle_difference(a, b);
  };
  const auto sets = laws::enumerate_soft_sets(laws::generated_context(2, 2));
  for (const auto& s : sets) {
    for (const auto& t : sets) compare(s, t);
  }
  const Context ctx = laws::generated_context(6, 6);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10'000; ++i) {
    const double d = static_cast<double>(pick(rng, 0, 10)) / 10.0;
    const double m = static_cast<double>(pick(rng, 1, 10)) / 10.0;
    const SoftSet s = laws::random_soft_set(ctx, rng, d, m);
    const SoftSet t = laws::random_soft_set(ctx, rng, d, m);
    compare(s, t);
  }
  v.require(mismatches == 0, std::to_string(mismatches) + " oracle mismatches");
  return v;
}

Verdict ac4_mutants() {
  Verdict v;
  const auto mutants = softset::testing::mutant_laws();
  v.require(mutants.size() >= 5, "fewer than 5 mutants");
  const Context ctx = laws::generated_context(3, 3);
  for (const auto& law : mutants) {
    const laws::CheckReport r = laws::check_random(law, ctx, 1000, 0);
    v.require(!r.passed(), law.id + " not refuted in 1000 trials");
    if (r.passed()) continue;
    const auto& cx = *r.counterexample;
    v.require(law(cx.context, cx.arguments).violated(), law.id + " shrunk counterexample no longer violates");
  }
  return v;
}

Verdict ac5_round_trips() {
  Verdict v;
  std::mt19937_64 rng(5);
  const std::vector<std::string> names = {"F", "G", "H"};
  for (int i = 0; i < 1000; ++i) {
    const expr::ExprPtr e = softset::testing::random_expr(rng, 5, names);
    const std::string text = expr::render(*e);
    const expr::ExprPtr back = expr::parse(text);
    v.require(*back == *e && expr::render(*back) == text, "expression round trip failed: " + text);
  }
  for (int i = 0; i < 1000; ++i) {
    const io::Workspace ws = softset::testing::random_workspace(rng);
    const std::string text = io::render_workspace(ws);
    const io::Workspace back = io::load_workspace(text);
    v.require(back == ws && io::render_workspace(back) == text, "workspace round trip failed");
  }
  const expr::ExprPtr lhs = expr::parse("(F & G)^c");
  const expr::ExprPtr rhs = expr::parse("F^c | G^c");
  for (int i = 0; i < 1000; ++i) {
    const Context ctx = laws::generated_context(softset::testing::pick(rng, 1, 8), softset::testing::pick(rng, 0, 8));
    expr::Environment env;
    env.emplace("F", laws::random_soft_set(ctx, rng, 0.7, 0.5));
    env.emplace("G", laws::random_soft_set(ctx, rng, 0.7, 0.5));
    v.require(algebra::equals(expr::evaluate(*lhs, env, ctx), expr::evaluate(*rhs, env, ctx)),
              "De Morgan failed at the expression level");
  }
  return v;
}

Verdict ac6_normalization() {
  Verdict v;
  std::mt19937_64 rng(6);
  std::size_t with_empty = 0;
  for (int i = 0; i < 1000; ++i) {
    const Context ctx = laws::generated_context(softset::testing::pick(rng, 1, 7), softset::testing::pick(rng, 0, 7));
    const auto raw = softset::testing::random_pairs(ctx, rng);
    std::vector<NamedPair> filtered;
    for (const auto& p : raw) {
      if (p.second.empty()) ++with_empty;
      else filtered.push_back(p);
    }
    const SoftSet s = soft_set(ctx, raw);
    v.require(s == soft_set(ctx, filtered), "normalization changed the result");
    for (const Entry& e : s.entries()) v.require(!e.objects.empty(), "empty image exposed");
    for (std::size_t p = 0; p < ctx.parameter_count(); ++p) {
      const auto image = s.image(ctx.parameter(p));
      v.require(!image || !image->empty(), "empty image exposed through image()");
    }
  }
  v.require(with_empty > 0, "generator produced no empty images");
  return v;
}

struct Criterion {
  const char* id;
  const char* title;
  std::function<Verdict()> run;
  double budget_seconds;  // 0 = no limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "paper-example fixtures byte-exact, difference erratum documented", ac1_paper_example, 1.0},
      {"AC2", "all catalog laws hold exhaustively at |U|=2,|E|=2 and arity<=2 at |U|=3,|E|=2",
       ac2_exhaustive_laws, 10.0},
      {"AC3", "incidence-matrix oracle agrees on all 2x2 pairs and 10^4 random 6x6 pairs", ac3_oracle, 0},
      {"AC4", "every mutant law refuted within 1000 trials at 3x3, shrunk case still violates", ac4_mutants,
       0},
      {"AC5", "expression and workspace round trips, De Morgan on 10^3 environments", ac5_round_trips, 0},
      {"AC6", "normalization drops empty images on 10^3 raw pair lists", ac6_normalization, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.note = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds && v.ok) {
      v.ok = false;
      v.note = "over time budget";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", seconds);
    std::cout << (v.ok ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << " (" << timing << ")";
    if (!v.ok) std::cout << ": " << v.note;
    std::cout << "\n";
    failures += v.ok ? 0 : 1;
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed\n" : "acceptance: FAILED\n");
  return failures == 0 ? 0 : 1;
}
