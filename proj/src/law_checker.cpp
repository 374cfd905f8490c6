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

#include <limits>
#include <stdexcept>

#include "softset/error.hpp"
#include "softset/laws.hpp"
#include "softset/workspace.hpp"

namespace softset::laws {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

// Uniform double in [0, 1) from the top 53 bits; stable across standard
// library implementations, unlike std::uniform_real_distribution.
double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::uint64_t soft_set_count(std::size_t universe_size, std::size_t parameter_count) {
  if (parameter_count == 0 || universe_size == 0) return 1;
  if (universe_size >= 64) return kSaturated;
  const std::uint64_t per_parameter = std::uint64_t{1} << universe_size;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < parameter_count; ++i) {
    total = saturating_mul(total, per_parameter);
    if (total == kSaturated) break;
  }
  return total;
}

std::uint64_t tuple_count(std::size_t universe_size, std::size_t parameter_count, int arity) {
  const std::uint64_t sets = soft_set_count(universe_size, parameter_count);
  std::uint64_t total = 1;
  for (int i = 0; i < arity; ++i) total = saturating_mul(total, sets);
  return total;
}

std::vector<SoftSet> enumerate_soft_sets(const Context& context, std::uint64_t cap) {
  const std::size_t n = context.object_count();
  const std::size_t m = context.parameter_count();
  const std::uint64_t count = soft_set_count(n, m);
  if (count > cap) {
    throw Error(ErrorKind::kEnumerationTooLarge,
                (count == kSaturated ? std::string("more than 2^64") : std::to_string(count)) + " soft sets over |U|=" +
                    std::to_string(n) + ", |E|=" + std::to_string(m) + " exceed the cap of " +
                    std::to_string(cap));
  }
  std::vector<SoftSet> out;
  out.reserve(count);
  if (m == 0) {
    out.push_back(empty_soft_set(context));
    return out;
  }
  // Mixed-radix odometer; digit 0 means "undefined", digit d > 0 is the image mask d.
  const std::uint64_t radix = std::uint64_t{1} << n;
  std::vector<std::uint64_t> digits(m, 0);
  for (std::uint64_t k = 0; k < count; ++k) {
    std::vector<Entry> entries;
    for (std::size_t p = 0; p < m; ++p) {
      if (digits[p] != 0) entries.push_back(Entry{p, ObjectSet::from_mask(n, digits[p])});
    }
    out.push_back(SoftSet::from_entries(context, std::move(entries)));
    for (std::size_t p = m; p-- > 0;) {
      if (++digits[p] < radix) break;
      digits[p] = 0;
    }
  }
  return out;
}

SoftSet random_soft_set(const Context& context, std::mt19937_64& rng, double defined_density,
                        double member_density) {
  if (!(defined_density >= 0.0 && defined_density <= 1.0)) {
    throw std::invalid_argument("defined_density must lie in [0, 1]");
  }
  if (!(member_density > 0.0 && member_density <= 1.0)) {
    throw std::invalid_argument("member_density must lie in (0, 1]");
  }
  const std::size_t n = context.object_count();
  std::vector<Entry> entries;
  for (std::size_t p = 0; p < context.parameter_count(); ++p) {
    if (!(unit_interval(rng) < defined_density)) continue;
    ObjectSet image(n);
    while (image.empty()) {
      for (std::size_t o = 0; o < n; ++o) {
        if (unit_interval(rng) < member_density) image.insert(o);
      }
    }
    entries.push_back(Entry{p, std::move(image)});
  }
  return SoftSet::from_entries(context, std::move(entries));
}

SoftSet random_soft_set(const Context& context, std::uint64_t seed, double defined_density,
                        double member_density) {
  std::mt19937_64 rng(seed);
  return random_soft_set(context, rng, defined_density, member_density);
}

Context generated_context(std::size_t universe_size, std::size_t parameter_count) {
  std::vector<std::string> objects;
  std::vector<std::string> parameters;
  for (std::size_t i = 1; i <= universe_size; ++i) objects.push_back("o" + std::to_string(i));
  for (std::size_t i = 1; i <= parameter_count; ++i) parameters.push_back("p" + std::to_string(i));
  return Context::create(std::move(objects), std::move(parameters));
}

std::string_view to_string(Mode mode) { return mode == Mode::kExhaustive ? "exhaustive" : "random"; }

CheckReport check_exhaustive(const Law& law, const Context& context, std::uint64_t cap) {
  const std::uint64_t tuples = tuple_count(context.object_count(), context.parameter_count(), law.arity);
  if (tuples > cap) {
    throw Error(ErrorKind::kEnumerationTooLarge,
                "law '" + law.id + "' needs " +
                    (tuples == kSaturated ? std::string("more than 2^64") : std::to_string(tuples)) +
                    " tuples over |U|=" + std::to_string(context.object_count()) +
                    ", |E|=" + std::to_string(context.parameter_count()) + "; cap is " + std::to_string(cap));
  }
  const std::vector<SoftSet> sets = enumerate_soft_sets(context, cap);
  CheckReport report;
  report.law_id = law.id;
  report.mode = Mode::kExhaustive;

  const std::size_t arity = static_cast<std::size_t>(law.arity);
  std::vector<std::size_t> index(arity, 0);
  std::vector<SoftSet> args(arity, sets.front());
  for (std::uint64_t k = 0; k < tuples; ++k) {
    for (std::size_t i = 0; i < arity; ++i) args[i] = sets[index[i]];
    const CheckResult result = law(context, args);
    ++report.cases;
    if (result.verdict == Verdict::kVacuous) ++report.vacuous;
    if (result.violated()) {
      report.counterexample = shrink(law, Counterexample{context, args, result.detail});
      return report;
    }
    for (std::size_t i = arity; i-- > 0;) {
      if (++index[i] < sets.size()) break;
      index[i] = 0;
    }
  }
  return report;
}

CheckReport check_random(const Law& law, const Context& context, std::uint64_t trials,
                         std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("check_random needs at least one trial");
  CheckReport report;
  report.law_id = law.id;
  report.mode = Mode::kRandom;
  report.seed = seed;

  std::mt19937_64 rng(seed);
  std::vector<SoftSet> args;
  for (std::uint64_t k = 0; k < trials; ++k) {
    args.clear();
    for (int i = 0; i < law.arity; ++i) {
      const double defined_density = unit_interval(rng);
      const double member_density = 1.0 - unit_interval(rng);
      args.push_back(random_soft_set(context, rng, defined_density, member_density));
    }
    const CheckResult result = law(context, args);
    ++report.cases;
    if (result.verdict == Verdict::kVacuous) ++report.vacuous;
    if (result.violated()) {
      report.counterexample = shrink(law, Counterexample{context, args, result.detail});
      return report;
    }
  }
  return report;
}

std::string render_counterexample(const Counterexample& counterexample) {
  io::Workspace ws(counterexample.context);
  for (std::size_t i = 0; i < counterexample.arguments.size(); ++i) {
    ws.bind("s" + std::to_string(i + 1), counterexample.arguments[i]);
  }
  return io::render_workspace(ws);
}

}  // namespace softset::laws
