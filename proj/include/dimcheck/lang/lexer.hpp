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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dimcheck/lang/diagnostic.hpp"

namespace dimcheck::lang {

enum class TokenKind : std::uint8_t {
  Ident,
  Number,
  // keywords
  Dim,
  Unit,
  Base,
  Const,
  Let,
  Print,
  In,
  Sqrt,
  Pow,
  Single,
  Double,
  // punctuation
  Colon,
  Semi,
  Comma,
  Eq,
  At,
  LParen,
  RParen,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  End,
};

std::string_view to_string(TokenKind k) noexcept;

struct Token {
  TokenKind kind = TokenKind::End;
  std::string_view text;  // view into the lexed source
  SourcePos pos;
  std::size_t offset = 0;
  double number = 0.0;
  bool integer = false;  // Number without fraction or exponent part

  std::size_t end() const noexcept { return offset + text.size(); }
};

struct LexResult {
  std::vector<Token> tokens;  // always terminated by an End token
  Diagnostics diagnostics;
};

/// Tokenizes UDL source. `//` starts a comment running to end of line.
/// Illegal characters and malformed numbers are reported as ParseError and
/// skipped.
LexResult lex(std::string_view source);

}  // namespace dimcheck::lang
