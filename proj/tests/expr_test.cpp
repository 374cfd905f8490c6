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

#include <random>

#include "softset/algebra.hpp"
#include "softset/error.hpp"
#include "softset/expr.hpp"
#include "softset/houses.hpp"
#include "softset/laws.hpp"
#include "support/generators.hpp"

namespace softset::expr {
namespace {

std::vector<TokenKind> kinds(std::string_view text) {
  std::vector<TokenKind> out;
  for (const Token& t : tokenize(text)) out.push_back(t.kind);
  return out;
}

ErrorKind error_kind(std::string_view text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for '" << text << "'";
  return ErrorKind::kFormatError;
}

TEST(TokenizeTest, Examples) {
  using K = TokenKind;
  EXPECT_EQ(kinds("(F & G)^c"), (std::vector<K>{K::kLParen, K::kName, K::kAmp, K::kName, K::kRParen, K::kCaretC}));
  EXPECT_EQ(kinds("EMPTY | F"), (std::vector<K>{K::kEmptyKw, K::kPipe, K::kName}));
  EXPECT_EQ(kinds("UNIVERSAL \\ F - G"), (std::vector<K>{K::kUnivKw, K::kMinus, K::kName, K::kMinus, K::kName}));
  EXPECT_EQ(kinds("EMPTYish _x1"), (std::vector<K>{K::kName, K::kName}));
  EXPECT_TRUE(tokenize("  \t\n ").empty());
}

TEST(TokenizeTest, Positions) {
  const auto tokens = tokenize("F &\n  G");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[1].position, (SourcePosition{1, 3}));
  EXPECT_EQ(tokens[2].position, (SourcePosition{2, 3}));
}

TEST(TokenizeTest, LexErrors) {
  try {
    tokenize("F ? G");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kLexError);
    EXPECT_EQ(e.position(), (SourcePosition{1, 3}));
  }
  EXPECT_THROW(tokenize("F^"), Error);
  EXPECT_THROW(tokenize("F^d"), Error);
  EXPECT_THROW(tokenize("F + G"), Error);
}

TEST(ParseTest, PrecedenceAndAssociativity) {
  const auto f = Expr::name("F");
  const auto g = Expr::name("G");
  const auto h = Expr::name("H");
  EXPECT_EQ(*parse("F | G & H"), *Expr::unite(f, Expr::intersect(g, h)));
  EXPECT_EQ(*parse("F - G - H"), *Expr::difference(Expr::difference(f, g), h));
  EXPECT_EQ(*parse("F & G - H"), *Expr::difference(Expr::intersect(f, g), h));
  EXPECT_EQ(*parse("F - G & H"), *Expr::intersect(Expr::difference(f, g), h));
  EXPECT_EQ(*parse("F \\ G"), *Expr::difference(f, g));
  EXPECT_EQ(*parse("F & G^c"), *Expr::intersect(f, Expr::complement(g)));
  EXPECT_EQ(*parse("(F & G)^c^c"), *Expr::complement(Expr::complement(Expr::intersect(f, g))));
  EXPECT_EQ(*parse("F | G | H"), *Expr::unite(Expr::unite(f, g), h));
  EXPECT_EQ(*parse("EMPTY | UNIVERSAL"), *Expr::unite(Expr::empty(), Expr::universal()));
}

TEST(ParseTest, Errors) {
  EXPECT_EQ(error_kind("(F | G"), ErrorKind::kParseError);
  EXPECT_EQ(error_kind("F | G)"), ErrorKind::kParseError);
  EXPECT_EQ(error_kind(""), ErrorKind::kParseError);
  EXPECT_EQ(error_kind("F &"), ErrorKind::kParseError);
  EXPECT_EQ(error_kind("& F"), ErrorKind::kParseError);
  EXPECT_EQ(error_kind("F G"), ErrorKind::kParseError);
  EXPECT_EQ(error_kind("()"), ErrorKind::kParseError);
  EXPECT_EQ(error_kind("^c"), ErrorKind::kParseError);
  EXPECT_EQ(error_kind("F $"), ErrorKind::kLexError);
}

TEST(ParseTest, UnclosedParenPointsAtIt) {
  try {
    parse("F & (G | H");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.position(), (SourcePosition{1, 5}));
  }
}

TEST(ParseTest, ErrorPositionsLieInsideInput) {
  const std::vector<std::string> bad = {"(F | G", "F | G)", "F &", "& F", "F G", "()", "F ? G", "F^", "((F)",
                                        "F | (G &)", "  \n  F -", "F\n|\n", ")"};
  for (const auto& text : bad) {
    try {
      parse(text);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      ASSERT_TRUE(e.position().valid()) << text;
      std::size_t line = 1;
      std::size_t col = 1;
      bool found = false;
      for (char c : text) {
        if (line == e.position().line && col == e.position().column) found = true;
        if (c == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      EXPECT_TRUE(found) << text << " -> " << e.what();
    }
  }
}

TEST(RenderTest, FullyParenthesized) {
  EXPECT_EQ(render(*parse("F | G & H")), "(F | (G & H))");
  EXPECT_EQ(render(*parse("(F & G)^c")), "(F & G)^c");
  EXPECT_EQ(render(*parse("F^c^c - EMPTY")), "(F^c^c - EMPTY)");
}

TEST(RenderTest, RoundTripProperty) {
  std::mt19937_64 rng(101);
  const std::vector<std::string> names = {"F", "G", "H", "s_1"};
  for (int i = 0; i < 1000; ++i) {
    const ExprPtr e = testing::random_expr(rng, 5, names);
    const std::string text = render(*e);
    const ExprPtr back = parse(text);
    ASSERT_EQ(*back, *e) << text;
    EXPECT_EQ(render(*back), text);
  }
}

class EvaluateTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ws_ = houses::workspace();
    for (const auto& b : ws_.bindings()) env_.emplace(b.name, b.value);
  }
  SoftSet eval(std::string_view text) const { return evaluate(*parse(text), env_, ws_.context()); }
  const SoftSet& f() const { return *ws_.find("F"); }
  const SoftSet& g() const { return *ws_.find("G"); }

  io::Workspace ws_;
  Environment env_;
};

TEST_F(EvaluateTest, Operators) {
  EXPECT_EQ(eval("F & G"), algebra::intersection(f(), g()));
  EXPECT_EQ(eval("F | G"), algebra::union_of(f(), g()));
  EXPECT_EQ(eval("F - G"), algebra::difference(f(), g()));
  EXPECT_EQ(eval("F \\ G"), algebra::difference(f(), g()));
  EXPECT_EQ(eval("F^c"), algebra::complement(f()));
  EXPECT_EQ(eval("UNIVERSAL - F"), algebra::complement(f()));
  EXPECT_EQ(eval("EMPTY | F"), f());
  EXPECT_EQ(eval("EMPTY"), empty_soft_set(ws_.context()));
  EXPECT_EQ(eval("UNIVERSAL"), universal_soft_set(ws_.context()));
  EXPECT_EQ(eval("(F & G)^c"), eval("F^c | G^c"));
  EXPECT_EQ(eval("(F | G)^c"), eval("F^c & G^c"));
}

TEST_F(EvaluateTest, UnboundName) {
  try {
    eval("F & X");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnboundName);
    EXPECT_EQ(e.position(), (SourcePosition{1, 5}));
  }
}

TEST_F(EvaluateTest, ContextMismatch) {
  Environment env = env_;
  env.insert_or_assign("X", empty_soft_set(laws::generated_context(2, 2)));
  try {
    evaluate(*parse("F | X"), env, ws_.context());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kContextMismatch);
  }
}

// Pairs of expressions that must agree in every environment.
TEST(EvaluatePropertyTest, LawEquivalentExpressions) {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"(A & B)^c", "A^c | B^c"},
      {"(A | B)^c", "A^c & B^c"},
      {"A - B", "A & B^c"},
      {"A^c", "UNIVERSAL - A"},
      {"A^c^c", "A"},
      {"A | (B & C)", "(A | B) & (A | C)"},
      {"A & (B | C)", "(A & B) | (A & C)"},
      {"(A & B) & C", "A & (B & C)"},
      {"A | EMPTY", "A"},
      {"A & UNIVERSAL", "A"},
  };
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Context ctx = laws::generated_context(testing::pick(rng, 1, 6), testing::pick(rng, 0, 6));
    Environment env;
    for (const char* name : {"A", "B", "C"}) {
      env.emplace(name, laws::random_soft_set(ctx, rng, 0.7, 0.5));
    }
    for (const auto& [lhs, rhs] : pairs) {
      EXPECT_TRUE(algebra::equals(evaluate(*parse(lhs), env, ctx), evaluate(*parse(rhs), env, ctx)))
          << lhs << " vs " << rhs;
    }
  }
}

}  // namespace
}  // namespace softset::expr
