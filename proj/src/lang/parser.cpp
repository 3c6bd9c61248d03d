// Copyright 2026 The dimcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dimcheck/lang/parser.hpp"

#include <algorithm>
#include <limits>
#include <span>

#include "dimcheck/lang/lexer.hpp"

namespace dimcheck::lang {
namespace {

struct ParseFail {
  SourcePos pos;
  std::string message;
};

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : toks_(tokens) {}

  std::uint32_t node_count() const noexcept { return next_id_; }

  void program(std::vector<Statement>& out, Diagnostics& diags,
               const Diagnostics& lex_diags) {
    while (peek().kind != TokenKind::End) {
      const SourcePos start = peek().pos;
      try {
        out.push_back(statement());
      } catch (const ParseFail& fail) {
        const SourcePos stop = recover();
        bool lexed_bad = false;
        for (const auto& d : lex_diags) {
          if (d.pos >= start && d.pos <= stop) lexed_bad = true;
        }
        // the lexer already reported this statement
        if (!lexed_bad) {
          diags.push_back({"", fail.pos, ErrorCode::ParseError, fail.message});
        }
      }
    }
  }

  ExprPtr standalone() {
    ExprPtr e = expr();
    if (peek().kind != TokenKind::End) fail_expected("end of expression");
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(i_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  const Token& take() {
    const Token& t = toks_[i_];
    if (t.kind != TokenKind::End) ++i_;
    return t;
  }
  bool accept(TokenKind k) {
    if (peek().kind != k) return false;
    take();
    return true;
  }

  [[noreturn]] void fail_expected(std::string_view what) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::End
                            ? std::string("end of input")
                            : "'" + std::string(t.text) + "'";
    throw ParseFail{t.pos, "expected " + std::string(what) + ", found " +
                               found};
  }

  const Token& expect(TokenKind k) {
    if (peek().kind != k) fail_expected(to_string(k));
    return take();
  }

  // Skips past the next ';' and returns the position reached.
  SourcePos recover() {
    while (peek().kind != TokenKind::End && peek().kind != TokenKind::Semi) {
      take();
    }
    const SourcePos stop = peek().pos;
    accept(TokenKind::Semi);
    return stop;
  }

  Statement statement() {
    const Token& head = peek();
    switch (head.kind) {
      case TokenKind::Dim: {
        take();
        DimDecl d;
        d.pos = head.pos;
        const Token& name = expect(TokenKind::Ident);
        d.name = name.text;
        d.name_pos = name.pos;
        expect(TokenKind::Semi);
        return d;
      }
      case TokenKind::Unit: return unit_decl();
      case TokenKind::Const: {
        take();
        ConstDecl d;
        d.pos = head.pos;
        const Token& name = expect(TokenKind::Ident);
        d.symbol = name.text;
        d.symbol_pos = name.pos;
        expect(TokenKind::Eq);
        d.expr = expr();
        expect(TokenKind::Semi);
        return d;
      }
      case TokenKind::Let: return let_decl();
      case TokenKind::Print: {
        take();
        PrintStmt s;
        s.pos = head.pos;
        s.expr = expr();
        s.in_pos = expect(TokenKind::In).pos;
        s.unit = expr();
        expect(TokenKind::Semi);
        return s;
      }
      default:
        fail_expected("statement ('dim', 'unit', 'const', 'let' or 'print')");
    }
  }

  Statement unit_decl() {
    const Token& head = take();
    const Token& name = expect(TokenKind::Ident);
    expect(TokenKind::Eq);
    if (peek().kind == TokenKind::Base) {
      take();
      BaseUnitDecl d;
      d.pos = head.pos;
      d.symbol = name.text;
      d.symbol_pos = name.pos;
      expect(TokenKind::LParen);
      const Token& axis = expect(TokenKind::Ident);
      d.axis = axis.text;
      d.axis_pos = axis.pos;
      expect(TokenKind::Comma);
      const Token& factor = expect(TokenKind::Number);
      d.factor = factor.number;
      d.factor_pos = factor.pos;
      expect(TokenKind::RParen);
      expect(TokenKind::Semi);
      return d;
    }
    UnitDecl d;
    d.pos = head.pos;
    d.symbol = name.text;
    d.symbol_pos = name.pos;
    d.expr = expr();
    expect(TokenKind::Semi);
    return d;
  }

  Statement let_decl() {
    const Token& head = take();
    LetDecl d;
    d.pos = head.pos;
    const Token& name = expect(TokenKind::Ident);
    d.name = name.text;
    d.name_pos = name.pos;
    expect(TokenKind::Colon);
    d.annotation = expr();
    if (accept(TokenKind::At)) {
      if (accept(TokenKind::Single)) {
        d.prec = Precision::Single;
      } else if (accept(TokenKind::Double)) {
        d.prec = Precision::Double;
      } else {
        fail_expected("'single' or 'double'");
      }
    }
    expect(TokenKind::Eq);
    d.expr = expr();
    expect(TokenKind::Semi);
    return d;
  }

  ExprPtr node(Expr::Kind kind, const Token& at) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->id = next_id_++;
    e->pos = at.pos;
    e->begin = at.offset;
    e->end = at.end();
    return e;
  }

  ExprPtr binary(Expr::Kind kind, const Token& op, ExprPtr lhs, ExprPtr rhs) {
    ExprPtr e = node(kind, op);
    e->begin = lhs->begin;
    e->end = rhs->end;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = product();
    while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
      const Token& op = take();
      const auto kind =
          op.kind == TokenKind::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
      lhs = binary(kind, op, std::move(lhs), product());
    }
    return lhs;
  }

  ExprPtr product() {
    ExprPtr lhs = unary();
    while (peek().kind == TokenKind::Star || peek().kind == TokenKind::Slash) {
      const Token& op = take();
      const auto kind =
          op.kind == TokenKind::Star ? Expr::Kind::Mul : Expr::Kind::Div;
      lhs = binary(kind, op, std::move(lhs), unary());
    }
    return lhs;
  }

  ExprPtr unary() {
    if (peek().kind != TokenKind::Minus) return power();
    const Token& op = take();
    ExprPtr e = node(Expr::Kind::Neg, op);
    e->lhs = unary();
    e->end = e->lhs->end;
    return e;
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (peek().kind != TokenKind::Caret) return base;
    const Token& op = take();
    ExprPtr e = node(Expr::Kind::Pow, op);
    e->begin = base->begin;
    e->p = signed_int(e->end);
    e->q = 1;
    e->lhs = std::move(base);
    return e;
  }

  std::int32_t signed_int(std::size_t& end) {
    const bool negative = accept(TokenKind::Minus);
    const Token& t = peek();
    if (t.kind != TokenKind::Number || !t.integer) fail_expected("integer");
    take();
    end = t.end();
    const double v = negative ? -t.number : t.number;
    if (v < std::numeric_limits<std::int32_t>::min() ||
        v > std::numeric_limits<std::int32_t>::max()) {
      throw ParseFail{t.pos, "integer '" + std::string(t.text) +
                                 "' out of range"};
    }
    return static_cast<std::int32_t>(v);
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Number: {
        take();
        ExprPtr e = node(Expr::Kind::Number, t);
        e->number = t.number;
        return e;
      }
      case TokenKind::Ident: {
        take();
        ExprPtr e = node(Expr::Kind::Ident, t);
        e->name = t.text;
        return e;
      }
      case TokenKind::LParen: {
        take();
        ExprPtr e = expr();
        const Token& close = expect(TokenKind::RParen);
        e->begin = t.offset;
        e->end = close.end();
        return e;
      }
      case TokenKind::Sqrt: {
        take();
        ExprPtr e = node(Expr::Kind::Sqrt, t);
        expect(TokenKind::LParen);
        e->lhs = expr();
        e->end = expect(TokenKind::RParen).end();
        return e;
      }
      case TokenKind::Pow: {
        take();
        ExprPtr e = node(Expr::Kind::Pow, t);
        expect(TokenKind::LParen);
        e->lhs = expr();
        expect(TokenKind::Comma);
        std::size_t end = 0;
        e->p = signed_int(end);
        expect(TokenKind::Comma);
        const SourcePos qpos = peek().pos;
        e->q = signed_int(end);
        if (e->q < 1) {
          throw ParseFail{qpos, "power denominator must be a positive integer"};
        }
        e->end = expect(TokenKind::RParen).end();
        return e;
      }
      default:
        fail_expected("expression");
    }
  }

  std::span<const Token> toks_;
  std::size_t i_ = 0;
  std::uint32_t next_id_ = 0;
};

}  // namespace

ParseResult parse_program(std::string source) {
  ParseResult out;
  out.program.source = std::move(source);
  LexResult lexed = lex(out.program.source);
  Parser parser(lexed.tokens);
  Diagnostics parse_diags;
  parser.program(out.program.statements, parse_diags, lexed.diagnostics);
  out.program.node_count = parser.node_count();

  // merge in source order
  out.diagnostics = std::move(lexed.diagnostics);
  out.diagnostics.insert(out.diagnostics.end(), parse_diags.begin(),
                         parse_diags.end());
  std::stable_sort(out.diagnostics.begin(), out.diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     return a.pos < b.pos;
                   });
  return out;
}

ParsedExpr parse_expression(std::string source) {
  ParsedExpr out;
  out.source = std::move(source);
  LexResult lexed = lex(out.source);
  if (!lexed.diagnostics.empty()) {
    const Diagnostic& d = lexed.diagnostics.front();
    throw Error(ErrorCode::ParseError, d.message, d.pos);
  }
  Parser parser(lexed.tokens);
  try {
    out.expr = parser.standalone();
  } catch (const ParseFail& fail) {
    throw Error(ErrorCode::ParseError, fail.message, fail.pos);
  }
  out.node_count = parser.node_count();
  return out;
}

}  // namespace dimcheck::lang
