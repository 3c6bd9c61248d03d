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

// Static dimension checking of a UDL program.
//
// Statements are processed in order. Declarations build the unit system,
// `let` statements build the variable table, and every expression gets an
// inferred dimension, precision and (for pure unit expressions) a folded
// value. All diagnostics are collected; a failed statement does not stop
// the pass, and the symbol it would have defined is poisoned so that later
// uses stay quiet.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dimcheck/lang/ast.hpp"
#include "dimcheck/lang/diagnostic.hpp"
#include "dimcheck/lang/typer.hpp"
#include "dimcheck/unit_system.hpp"

namespace dimcheck::lang {

struct CheckOptions {
  EncodingConfig cfg{};
  Encoding encoding = Encoding::Packed;
  Precision default_prec = Precision::Double;
  std::string file = "<input>";
};

/// What evaluation needs to know about a statement once it has checked.
struct StatementInfo {
  // let
  std::uint32_t slot = 0;
  Precision prec = Precision::Double;
  DimVector dim;
  // print
  std::optional<UnitDef> unit;
  std::string label;
  std::string unit_text;
};

struct TypedProgram {
  Program ast;
  UnitSystem units;
  std::vector<NodeType> nodes;           // indexed by Expr::id
  std::vector<StatementInfo> statements;  // parallel to ast.statements
  std::uint32_t slot_count = 0;

  const NodeType& type_of(const Expr& e) const { return nodes.at(e.id); }
};

struct CheckResult {
  TypedProgram program;
  Diagnostics diagnostics;

  bool ok() const noexcept { return diagnostics.empty(); }
};

CheckResult check(Program ast, const CheckOptions& opts);

/// Parses and checks. Syntax errors short-circuit the semantic pass.
CheckResult check_source(std::string source, const CheckOptions& opts);

}  // namespace dimcheck::lang
