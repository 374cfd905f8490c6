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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "softset/error.hpp"
#include "softset/soft_set.hpp"
#include "support/generators.hpp"
#include "support/houses_data.hpp"

namespace softset {
namespace {

using testing::houses_context;
using testing::houses_f;
using testing::Names;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorKind::kFormatError;
}

TEST(ContextTest, HousesSizes) {
  const Context ctx = houses_context();
  EXPECT_EQ(ctx.object_count(), 5u);
  EXPECT_EQ(ctx.parameter_count(), 8u);
  EXPECT_EQ(ctx.parameter(0), "e1");
  EXPECT_EQ(ctx.object_index("h3"), 2u);
}

TEST(ContextTest, EmptyContextIsLegal) {
  const Context ctx = Context::create({}, {});
  EXPECT_EQ(ctx.object_count(), 0u);
  EXPECT_EQ(ctx, Context());
}

TEST(ContextTest, ConstructionErrors) {
  EXPECT_EQ(kind_of([] { Context::create({}, {"e1"}); }), ErrorKind::kEmptyUniverse);
  EXPECT_EQ(kind_of([] { Context::create({"h1", "h1"}, {}); }), ErrorKind::kDuplicateIdentifier);
  EXPECT_EQ(kind_of([] { Context::create({"h1"}, {"e1", "e1"}); }), ErrorKind::kDuplicateIdentifier);
  EXPECT_EQ(kind_of([] { Context::create({"h1", ""}, {}); }), ErrorKind::kBadIdentifier);
  EXPECT_EQ(kind_of([] { Context::create({"h1"}, {""}); }), ErrorKind::kBadIdentifier);
}

TEST(ContextTest, StructuralEquality) {
  EXPECT_EQ(houses_context(), houses_context());
  EXPECT_FALSE(Context::create({"a", "b"}, {}) == Context::create({"b", "a"}, {}));
}

TEST(SoftSetTest, HousesSoftSetF) {
  const Context ctx = houses_context();
  const SoftSet f = houses_f(ctx);
  EXPECT_EQ(domain(f), (Names{"e2", "e3", "e4", "e5", "e7"}));
  EXPECT_EQ(image(f, "e2"), (Names{"h2", "h3", "h5"}));
  EXPECT_EQ(image(f, "e4"), (Names{"h1"}));
  EXPECT_EQ(image(f, "e1"), std::nullopt);
  EXPECT_FALSE(is_universal(f));
  EXPECT_FALSE(is_empty(f));
  EXPECT_EQ(kind_of([&] { (void)image(f, "e9"); }), ErrorKind::kUnknownParameter);
}

TEST(SoftSetTest, EmptyImagesAreDropped) {
  const Context ctx = houses_context();
  const std::vector<NamedPair> pairs = {{"e1", {}}};
  EXPECT_TRUE(is_empty(soft_set(ctx, pairs)));
  EXPECT_EQ(soft_set(ctx, pairs), empty_soft_set(ctx));
}

TEST(SoftSetTest, ConstructorErrors) {
  const Context ctx = houses_context();
  const std::vector<NamedPair> dup = {{"e1", {"h1"}}, {"e1", {"h2"}}};
  EXPECT_EQ(kind_of([&] { soft_set(ctx, dup); }), ErrorKind::kDuplicateParameter);
  const std::vector<NamedPair> unknown_param = {{"e9", {"h1"}}};
  EXPECT_EQ(kind_of([&] { soft_set(ctx, unknown_param); }), ErrorKind::kUnknownParameter);
  const std::vector<NamedPair> unknown_obj = {{"e1", {"h9"}}};
  EXPECT_EQ(kind_of([&] { soft_set(ctx, unknown_obj); }), ErrorKind::kUnknownObject);
}

TEST(SoftSetTest, StrictConstructor) {
  const Context ctx = houses_context();
  const std::vector<NamedPair> one = {{"e1", {"h1"}}};
  EXPECT_EQ(domain(strict_soft_set(ctx, one)), (Names{"e1"}));
  const std::vector<NamedPair> empty_image = {{"e1", {}}};
  EXPECT_EQ(kind_of([&] { strict_soft_set(ctx, empty_image); }), ErrorKind::kEmptyImage);
  EXPECT_TRUE(is_empty(strict_soft_set(ctx, {})));
  const std::vector<NamedPair> dup = {{"e1", {"h1"}}, {"e1", {"h2"}}};
  EXPECT_EQ(kind_of([&] { strict_soft_set(ctx, dup); }), ErrorKind::kDuplicateParameter);
}

TEST(SoftSetTest, EmptyAndUniversal) {
  const Context ctx = houses_context();
  const SoftSet empty = empty_soft_set(ctx);
  EXPECT_TRUE(is_empty(empty));
  EXPECT_TRUE(domain(empty).empty());
  const SoftSet universal = universal_soft_set(ctx);
  EXPECT_TRUE(is_universal(universal));
  EXPECT_EQ(domain(universal).size(), 8u);
  for (const auto& p : ctx.parameters()) EXPECT_EQ(image(universal, p), ctx.objects());

  const Context none = Context::create({}, {});
  EXPECT_TRUE(is_empty(universal_soft_set(none)));
  EXPECT_TRUE(is_universal(universal_soft_set(none)));
  EXPECT_TRUE(is_universal(empty_soft_set(none)));
}

TEST(SoftSetTest, ConstructorIdempotence) {
  const Context ctx = houses_context();
  const SoftSet f = houses_f(ctx);
  std::vector<NamedPair> pairs;
  for (const auto& p : domain(f)) pairs.emplace_back(p, *image(f, p));
  EXPECT_EQ(soft_set(ctx, pairs), f);
}

TEST(SoftSetTest, NormalizationAndOrderIndependenceProperties) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const Context ctx = laws::generated_context(testing::pick(rng, 1, 6), testing::pick(rng, 0, 6));
    auto pairs = testing::random_pairs(ctx, rng);
    const SoftSet s = soft_set(ctx, pairs);

    auto filtered = pairs;
    std::erase_if(filtered, [](const NamedPair& p) { return p.second.empty(); });
    EXPECT_EQ(s, soft_set(ctx, filtered));

    std::shuffle(pairs.begin(), pairs.end(), rng);
    EXPECT_EQ(s, soft_set(ctx, pairs));

    for (const Entry& e : s.entries()) EXPECT_FALSE(e.objects.empty());
  }
}

}  // namespace
}  // namespace softset
