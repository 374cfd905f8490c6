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

#include "softset/expr.hpp"

#include <cctype>

#include "softset/algebra.hpp"

namespace softset::expr {

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kName: return "NAME";
    case TokenKind::kAmp: return "AMP";
    case TokenKind::kPipe: return "PIPE";
    case TokenKind::kMinus: return "MINUS";
    case TokenKind::kCaretC: return "CARET_C";
    case TokenKind::kLParen: return "LPAREN";
    case TokenKind::kRParen: return "RPAREN";
    case TokenKind::kEmptyKw: return "EMPTY_KW";
    case TokenKind::kUnivKw: return "UNIV_KW";
  }
  return "?";
}

namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    const SourcePosition here{line, column};
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (name_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && name_char(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      TokenKind kind = TokenKind::kName;
      if (word == "EMPTY") kind = TokenKind::kEmptyKw;
      else if (word == "UNIVERSAL") kind = TokenKind::kUnivKw;
      tokens.push_back(Token{kind, std::move(word), here});
      advance(j - i);
      continue;
    }
    TokenKind kind;
    std::size_t width = 1;
    switch (c) {
      case '&': kind = TokenKind::kAmp; break;
      case '|': kind = TokenKind::kPipe; break;
      case '-':
      case '\\': kind = TokenKind::kMinus; break;
      case '(': kind = TokenKind::kLParen; break;
      case ')': kind = TokenKind::kRParen; break;
      case '^':
        if (i + 1 >= text.size() || text[i + 1] != 'c') {
          throw Error(ErrorKind::kLexError, "'^' must be followed by 'c'", here);
        }
        kind = TokenKind::kCaretC;
        width = 2;
        break;
      default:
        throw Error(ErrorKind::kLexError, "illegal character '" + std::string(1, c) + "'", here);
    }
    tokens.push_back(Token{kind, std::string(text.substr(i, width)), here});
    advance(width);
  }
  return tokens;
}

// ---- tree ---------------------------------------------------------------

ExprPtr Expr::name(std::string identifier, SourcePosition position) {
  return ExprPtr(new Expr(NodeKind::kName, std::move(identifier), position, nullptr, nullptr));
}
ExprPtr Expr::empty() { return ExprPtr(new Expr(NodeKind::kEmpty, {}, {}, nullptr, nullptr)); }
ExprPtr Expr::universal() { return ExprPtr(new Expr(NodeKind::kUniversal, {}, {}, nullptr, nullptr)); }
ExprPtr Expr::complement(ExprPtr child) {
  return ExprPtr(new Expr(NodeKind::kComplement, {}, {}, std::move(child), nullptr));
}
ExprPtr Expr::intersect(ExprPtr left, ExprPtr right) {
  return ExprPtr(new Expr(NodeKind::kIntersect, {}, {}, std::move(left), std::move(right)));
}
ExprPtr Expr::unite(ExprPtr left, ExprPtr right) {
  return ExprPtr(new Expr(NodeKind::kUnion, {}, {}, std::move(left), std::move(right)));
}
ExprPtr Expr::difference(ExprPtr left, ExprPtr right) {
  return ExprPtr(new Expr(NodeKind::kDifference, {}, {}, std::move(left), std::move(right)));
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind_ != b.kind_ || a.identifier_ != b.identifier_) return false;
  auto same = [](const ExprPtr& x, const ExprPtr& y) {
    if (!x || !y) return !x && !y;
    return *x == *y;
  };
  return same(a.left_, b.left_) && same(a.right_, b.right_);
}

// ---- parser -------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  ExprPtr parse_all() {
    if (tokens_.empty()) throw Error(ErrorKind::kParseError, "empty expression", SourcePosition{1, 1});
    ExprPtr e = parse_union();
    if (pos_ < tokens_.size()) {
      const Token& t = tokens_[pos_];
      if (t.kind == TokenKind::kRParen) {
        throw Error(ErrorKind::kParseError, "unbalanced parenthesis: unexpected ')'", t.position);
      }
      throw Error(ErrorKind::kParseError, "trailing input '" + t.text + "'", t.position);
    }
    return e;
  }

 private:
  const Token* peek() const { return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr; }
  bool at(TokenKind kind) const { return peek() != nullptr && peek()->kind == kind; }

  ExprPtr parse_union() {
    ExprPtr left = parse_term();
    while (at(TokenKind::kPipe)) {
      ++pos_;
      left = Expr::unite(std::move(left), parse_term());
    }
    return left;
  }

  ExprPtr parse_term() {
    ExprPtr left = parse_postfix();
    while (at(TokenKind::kAmp) || at(TokenKind::kMinus)) {
      const bool intersect = at(TokenKind::kAmp);
      ++pos_;
      ExprPtr right = parse_postfix();
      left = intersect ? Expr::intersect(std::move(left), std::move(right))
                       : Expr::difference(std::move(left), std::move(right));
    }
    return left;
  }

  ExprPtr parse_postfix() {
    ExprPtr e = parse_primary();
    while (at(TokenKind::kCaretC)) {
      ++pos_;
      e = Expr::complement(std::move(e));
    }
    return e;
  }

  ExprPtr parse_primary() {
    const Token* t = peek();
    if (t == nullptr) {
      throw Error(ErrorKind::kParseError, "unexpected end of input, expected an operand",
                  tokens_.back().position);
    }
    switch (t->kind) {
      case TokenKind::kName:
        ++pos_;
        return Expr::name(t->text, t->position);
      case TokenKind::kEmptyKw:
        ++pos_;
        return Expr::empty();
      case TokenKind::kUnivKw:
        ++pos_;
        return Expr::universal();
      case TokenKind::kLParen: {
        const SourcePosition open = t->position;
        ++pos_;
        ExprPtr inner = parse_union();
        if (!at(TokenKind::kRParen)) {
          if (peek() == nullptr) {
            throw Error(ErrorKind::kParseError, "unbalanced parenthesis: '(' is never closed", open);
          }
          throw Error(ErrorKind::kParseError, "expected ')' but found '" + peek()->text + "'",
                      peek()->position);
        }
        ++pos_;
        return inner;
      }
      case TokenKind::kRParen:
        throw Error(ErrorKind::kParseError, "unbalanced parenthesis: unexpected ')'", t->position);
      default:
        throw Error(ErrorKind::kParseError, "unexpected '" + t->text + "', expected an operand",
                    t->position);
    }
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(const std::vector<Token>& tokens) { return Parser(tokens).parse_all(); }

ExprPtr parse(std::string_view text) { return parse(tokenize(text)); }

std::string render(const Expr& expr) {
  auto binary = [&](std::string_view op) {
    return "(" + render(*expr.left()) + " " + std::string(op) + " " + render(*expr.right()) + ")";
  };
  switch (expr.kind()) {
    case NodeKind::kName: return expr.identifier();
    case NodeKind::kEmpty: return "EMPTY";
    case NodeKind::kUniversal: return "UNIVERSAL";
    case NodeKind::kComplement: return render(*expr.left()) + "^c";
    case NodeKind::kIntersect: return binary("&");
    case NodeKind::kUnion: return binary("|");
    case NodeKind::kDifference: return binary("-");
  }
  return {};
}

SoftSet evaluate(const Expr& expr, const Environment& env, const Context& context) {
  switch (expr.kind()) {
    case NodeKind::kName: {
      auto it = env.find(expr.identifier());
      if (it == env.end()) {
        throw Error(ErrorKind::kUnboundName, "unbound name " + expr.identifier(), expr.position());
      }
      if (!(it->second.context() == context)) {
        throw Error(ErrorKind::kContextMismatch,
                    "soft set " + expr.identifier() + " belongs to another context", expr.position());
      }
      return it->second;
    }
    case NodeKind::kEmpty: return empty_soft_set(context);
    case NodeKind::kUniversal: return universal_soft_set(context);
    case NodeKind::kComplement: return algebra::complement(evaluate(*expr.left(), env, context));
    case NodeKind::kIntersect:
      return algebra::intersection(evaluate(*expr.left(), env, context), evaluate(*expr.right(), env, context));
    case NodeKind::kUnion:
      return algebra::union_of(evaluate(*expr.left(), env, context), evaluate(*expr.right(), env, context));
    case NodeKind::kDifference:
      return algebra::difference(evaluate(*expr.left(), env, context), evaluate(*expr.right(), env, context));
  }
  return empty_soft_set(context);
}

}  // namespace softset::expr
