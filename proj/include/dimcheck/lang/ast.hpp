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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dimcheck/error.hpp"
#include "dimcheck/quantity.hpp"

namespace dimcheck::lang {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  enum class Kind : std::uint8_t {
    Number,
    Ident,
    Neg,
    Add,
    Sub,
    Mul,
    Div,
    Sqrt,
    Pow,  // both `x^n` and `pow(x, p, q)`
  };

  Kind kind = Kind::Number;
  std::uint32_t id = 0;  // dense per program, indexes TypedProgram::nodes
  SourcePos pos;         // operator token for binary nodes, else first token
  std::size_t begin = 0;  // source byte range
  std::size_t end = 0;

  double number = 0.0;
  std::string name;
  std::int32_t p = 1;
  std::int32_t q = 1;
  ExprPtr lhs;
  ExprPtr rhs;

  bool binary() const noexcept {
    return kind == Kind::Add || kind == Kind::Sub || kind == Kind::Mul ||
           kind == Kind::Div;
  }
};

struct DimDecl {
  SourcePos pos;
  std::string name;
  SourcePos name_pos;
};

struct BaseUnitDecl {
  SourcePos pos;
  std::string symbol;
  SourcePos symbol_pos;
  std::string axis;
  SourcePos axis_pos;
  double factor = 1.0;
  SourcePos factor_pos;
};

struct UnitDecl {
  SourcePos pos;
  std::string symbol;
  SourcePos symbol_pos;
  ExprPtr expr;
};

struct ConstDecl {
  SourcePos pos;
  std::string symbol;
  SourcePos symbol_pos;
  ExprPtr expr;
};

struct LetDecl {
  SourcePos pos;
  std::string name;
  SourcePos name_pos;
  ExprPtr annotation;
  std::optional<Precision> prec;
  ExprPtr expr;
};

struct PrintStmt {
  SourcePos pos;
  ExprPtr expr;
  SourcePos in_pos;
  ExprPtr unit;
};

using Statement =
    std::variant<DimDecl, BaseUnitDecl, UnitDecl, ConstDecl, LetDecl, PrintStmt>;

struct Program {
  std::string source;
  std::vector<Statement> statements;
  std::uint32_t node_count = 0;

  std::string_view text(const Expr& e) const {
    return std::string_view(source).substr(e.begin, e.end - e.begin);
  }
};

}  // namespace dimcheck::lang
