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

// Executable catalog of the algebraic laws of soft-set operations, plus the
// machinery to check them: an exhaustive enumerator, a seeded random
// generator, and a greedy counterexample shrinker.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "softset/soft_set.hpp"

namespace softset::laws {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

enum class Verdict { kHolds, kVacuous, kViolated };

struct CheckResult {
  Verdict verdict = Verdict::kHolds;
  std::string detail;  // why the law failed, when violated

  static CheckResult holds() { return {}; }
  static CheckResult vacuous() { return {Verdict::kVacuous, {}}; }
  static CheckResult violated(std::string why) { return {Verdict::kViolated, std::move(why)}; }
  bool violated() const { return verdict == Verdict::kViolated; }
};

// A named identity over `arity` soft sets. `check` receives exactly `arity`
// soft sets over `context` and must be a pure function of its inputs.
struct Law {
  std::string id;
  int arity = 1;
  std::string statement;
  std::function<CheckResult(const Context&, std::span<const SoftSet>)> check;

  CheckResult operator()(const Context& context, std::span<const SoftSet> args) const;
};

const std::vector<Law>& law_catalog();
// nullptr when no law has this id.
const Law* find_law(std::string_view id);

// ---- generation ----------------------------------------------------------

// Number of soft sets over a context, (2^|U|)^|E|, saturating at UINT64_MAX.
std::uint64_t soft_set_count(std::size_t universe_size, std::size_t parameter_count);
// Number of argument tuples for a law of the given arity, saturating.
std::uint64_t tuple_count(std::size_t universe_size, std::size_t parameter_count, int arity);

// Every soft set over `context`, each exactly once, in a fixed order: the
// first parameter varies slowest, and per parameter "undefined" precedes the
// nonempty images in increasing bitmask order. Throws EnumerationTooLarge
// when the count exceeds `cap`.
std::vector<SoftSet> enumerate_soft_sets(const Context& context,
                                         std::uint64_t cap = kDefaultEnumerationCap);

// Each parameter is defined with probability defined_density ∈ [0, 1];
// each object joins a defined image with probability member_density ∈ (0, 1],
// resampling empty images. Deterministic given the arguments.
SoftSet random_soft_set(const Context& context, std::uint64_t seed, double defined_density,
                        double member_density);
SoftSet random_soft_set(const Context& context, std::mt19937_64& rng, double defined_density,
                        double member_density);

// Context with objects o1..oN and parameters p1..pM.
Context generated_context(std::size_t universe_size, std::size_t parameter_count);

// ---- checking ------------------------------------------------------------

enum class Mode { kExhaustive, kRandom };
std::string_view to_string(Mode mode);

struct Counterexample {
  Context context;
  std::vector<SoftSet> arguments;
  std::string detail;
};

struct CheckReport {
  std::string law_id;
  Mode mode = Mode::kExhaustive;
  std::uint64_t cases = 0;    // argument tuples evaluated
  std::uint64_t vacuous = 0;  // of which the law's hypothesis did not apply
  std::optional<std::uint64_t> seed;
  // Present on failure; already shrunk to a local minimum.
  std::optional<Counterexample> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

CheckReport check_exhaustive(const Law& law, const Context& context,
                             std::uint64_t cap = kDefaultEnumerationCap);
CheckReport check_random(const Law& law, const Context& context, std::uint64_t trials,
                         std::uint64_t seed);

// Greedy first-improvement reduction of a violating tuple. Candidate
// reductions, tried in this fixed order: drop a parameter from E, undefine a
// parameter in one argument, drop an object from U, remove an object from
// one image. Any candidate that still violates is accepted and the scan
// restarts. The result is locally minimal, not necessarily globally.
Counterexample shrink(const Law& law, Counterexample violating);

// Workspace-format rendering with the arguments bound to s1..sN.
std::string render_counterexample(const Counterexample& counterexample);

}  // namespace softset::laws
