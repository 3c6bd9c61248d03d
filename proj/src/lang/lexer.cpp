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

#include "dimcheck/lang/lexer.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <utility>

namespace dimcheck::lang {
namespace {

constexpr std::array<std::pair<std::string_view, TokenKind>, 11> kKeywords{{
    {"dim", TokenKind::Dim},
    {"unit", TokenKind::Unit},
    {"base", TokenKind::Base},
    {"const", TokenKind::Const},
    {"let", TokenKind::Let},
    {"print", TokenKind::Print},
    {"in", TokenKind::In},
    {"sqrt", TokenKind::Sqrt},
    {"pow", TokenKind::Pow},
    {"single", TokenKind::Single},
    {"double", TokenKind::Double},
}};

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  LexResult run() {
    while (true) {
      skip_space_and_comments();
      if (at_end()) break;
      const char c = peek();
      if (is_ident_start(c)) {
        ident();
      } else if (is_digit(c)) {
        number();
      } else if (!punct(c)) {
        error(pos(), std::string("illegal character '") +
                         (static_cast<unsigned char>(c) < 0x80
                              ? std::string(1, c)
                              : std::string("\\x") + hex(c)) +
                         "'");
        advance();
      }
    }
    Token end;
    end.kind = TokenKind::End;
    end.pos = pos();
    end.offset = i_;
    out_.tokens.push_back(end);
    return std::move(out_);
  }

 private:
  static std::string hex(char c) {
    static constexpr char kDigits[] = "0123456789abcdef";
    const auto u = static_cast<unsigned char>(c);
    return {kDigits[u >> 4], kDigits[u & 0xf]};
  }

  bool at_end() const { return i_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0';
  }
  SourcePos pos() const { return {line_, col_}; }

  void advance() {
    if (src_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip_space_and_comments() {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  void emit(TokenKind kind, std::size_t start, SourcePos at) {
    Token t;
    t.kind = kind;
    t.text = src_.substr(start, i_ - start);
    t.pos = at;
    t.offset = start;
    out_.tokens.push_back(t);
  }

  void error(SourcePos at, std::string message) {
    out_.diagnostics.push_back({"", at, ErrorCode::ParseError,
                                std::move(message)});
  }

  void ident() {
    const std::size_t start = i_;
    const SourcePos at = pos();
    while (!at_end() && is_ident_char(peek())) advance();
    const std::string_view word = src_.substr(start, i_ - start);
    TokenKind kind = TokenKind::Ident;
    for (const auto& [kw, k] : kKeywords) {
      if (kw == word) kind = k;
    }
    emit(kind, start, at);
  }

  void number() {
    const std::size_t start = i_;
    const SourcePos at = pos();
    bool integer = true;
    bool malformed = false;
    while (is_digit(peek())) advance();
    if (peek() == '.') {
      integer = false;
      advance();
      if (!is_digit(peek())) malformed = true;
      while (is_digit(peek())) advance();
    }
    if (peek() == 'e' || peek() == 'E') {
      integer = false;
      advance();
      if (peek() == '+' || peek() == '-') advance();
      if (!is_digit(peek())) malformed = true;
      while (is_digit(peek())) advance();
    }
    // "2m" or "1.5.3" are typos, not two tokens
    while (!at_end() && (is_ident_char(peek()) || peek() == '.')) {
      malformed = true;
      advance();
    }
    const std::string_view text = src_.substr(start, i_ - start);
    double value = 0.0;
    if (!malformed) {
      const auto [ptr, ec] =
          std::from_chars(text.data(), text.data() + text.size(), value);
      malformed = ec != std::errc() || ptr != text.data() + text.size() ||
                  !std::isfinite(value);
    }
    if (malformed) {
      error(at, "malformed number '" + std::string(text) + "'");
      return;
    }
    emit(TokenKind::Number, start, at);
    out_.tokens.back().number = value;
    out_.tokens.back().integer = integer;
  }

  bool punct(char c) {
    TokenKind kind;
    switch (c) {
      case ':': kind = TokenKind::Colon; break;
      case ';': kind = TokenKind::Semi; break;
      case ',': kind = TokenKind::Comma; break;
      case '=': kind = TokenKind::Eq; break;
      case '@': kind = TokenKind::At; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '/': kind = TokenKind::Slash; break;
      case '^': kind = TokenKind::Caret; break;
      default: return false;
    }
    const std::size_t start = i_;
    const SourcePos at = pos();
    advance();
    emit(kind, start, at);
    return true;
  }

  std::string_view src_;
  std::size_t i_ = 0;
  std::uint32_t line_ = 1;
  std::uint32_t col_ = 1;
  LexResult out_;
};

}  // namespace

std::string_view to_string(TokenKind k) noexcept {
  switch (k) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::Number: return "number";
    case TokenKind::Dim: return "'dim'";
    case TokenKind::Unit: return "'unit'";
    case TokenKind::Base: return "'base'";
    case TokenKind::Const: return "'const'";
    case TokenKind::Let: return "'let'";
    case TokenKind::Print: return "'print'";
    case TokenKind::In: return "'in'";
    case TokenKind::Sqrt: return "'sqrt'";
    case TokenKind::Pow: return "'pow'";
    case TokenKind::Single: return "'single'";
    case TokenKind::Double: return "'double'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Semi: return "';'";
    case TokenKind::Comma: return "','";
    case TokenKind::Eq: return "'='";
    case TokenKind::At: return "'@'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

LexResult lex(std::string_view source) { return Lexer(source).run(); }

std::string format(const Diagnostic& d) {
  return d.file + ":" + std::to_string(d.pos.line) + ":" +
         std::to_string(d.pos.col) + ": error[" +
         std::string(dimcheck::to_string(d.code)) + "]: " + d.message;
}

}  // namespace dimcheck::lang
