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

// Expression language over named soft sets.
//
//   expr     = term { "|" term } ;
//   term     = postfix { ( "&" | "-" | "\" ) postfix } ;
//   postfix  = primary { "^c" } ;
//   primary  = NAME | "EMPTY" | "UNIVERSAL" | "(" expr ")" ;
//   NAME     = [A-Za-z_][A-Za-z0-9_]*  (other than the two keywords) ;
//
// "|" is union, "&" intersection, "-" and "\" difference, postfix "^c"
// complement. "&" and "-" share a precedence level; binary operators are
// left-associative.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "softset/error.hpp"
#include "softset/soft_set.hpp"

namespace softset::expr {

enum class TokenKind { kName, kAmp, kPipe, kMinus, kCaretC, kLParen, kRParen, kEmptyKw, kUnivKw };

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;
  SourcePosition position;

  friend bool operator==(const Token&, const Token&) = default;
};

// Throws LexError on an illegal character or a '^' not followed by 'c'.
std::vector<Token> tokenize(std::string_view text);

enum class NodeKind { kName, kEmpty, kUniversal, kComplement, kIntersect, kUnion, kDifference };

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable expression tree node. Positions are informational and do not
// take part in equality.
class Expr {
 public:
  static ExprPtr name(std::string identifier, SourcePosition position = {});
  static ExprPtr empty();
  static ExprPtr universal();
  static ExprPtr complement(ExprPtr child);
  static ExprPtr intersect(ExprPtr left, ExprPtr right);
  static ExprPtr unite(ExprPtr left, ExprPtr right);
  static ExprPtr difference(ExprPtr left, ExprPtr right);

  NodeKind kind() const { return kind_; }
  const std::string& identifier() const { return identifier_; }
  const SourcePosition& position() const { return position_; }
  // Complement uses left() only.
  const ExprPtr& left() const { return left_; }
  const ExprPtr& right() const { return right_; }

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  Expr(NodeKind kind, std::string identifier, SourcePosition position, ExprPtr left, ExprPtr right)
      : kind_(kind),
        identifier_(std::move(identifier)),
        position_(position),
        left_(std::move(left)),
        right_(std::move(right)) {}

  NodeKind kind_;
  std::string identifier_;
  SourcePosition position_;
  ExprPtr left_;
  ExprPtr right_;
};

// Throws ParseError positioned at the offending token; errors at end of
// input point at the unmatched '(' or the last token.
ExprPtr parse(const std::vector<Token>& tokens);
// tokenize + parse.
ExprPtr parse(std::string_view text);

// Fully parenthesized text that parses back to an equal tree.
std::string render(const Expr& expr);

using Environment = std::map<std::string, SoftSet, std::less<>>;

// Throws UnboundName (with the name's position) and ContextMismatch.
SoftSet evaluate(const Expr& expr, const Environment& env, const Context& context);

}  // namespace softset::expr
