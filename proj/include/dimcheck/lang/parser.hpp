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

// Recursive-descent parser for UDL.
//
//   program   := statement*
//   statement := "dim" IDENT ";"
//              | "unit" IDENT "=" "base" "(" IDENT "," NUMBER ")" ";"
//              | "unit" IDENT "=" expr ";"
//              | "const" IDENT "=" expr ";"
//              | "let" IDENT ":" expr ("@" ("single"|"double"))? "=" expr ";"
//              | "print" expr "in" expr ";"
//   expr      := product (("+"|"-") product)*
//   product   := unary (("*"|"/") unary)*
//   unary     := "-" unary | power
//   power     := atom ("^" SINT)?
//   atom      := NUMBER | IDENT | "(" expr ")"
//              | "sqrt" "(" expr ")" | "pow" "(" expr "," SINT "," SINT ")"
//   SINT      := "-"? INT
//
// Syntax errors resynchronize at the next ";", so one pass reports every
// malformed statement.

#pragma once

#include <string>

#include "dimcheck/lang/ast.hpp"
#include "dimcheck/lang/diagnostic.hpp"

namespace dimcheck::lang {

struct ParseResult {
  Program program;
  Diagnostics diagnostics;

  bool ok() const noexcept { return diagnostics.empty(); }
};

ParseResult parse_program(std::string source);

/// A standalone expression, as used for unit definitions through the
/// library API.
struct ParsedExpr {
  std::string source;
  ExprPtr expr;
  std::uint32_t node_count = 0;
};

/// Throws Error(ParseError) on the first syntax error.
ParsedExpr parse_expression(std::string source);

}  // namespace dimcheck::lang
