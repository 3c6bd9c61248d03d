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

// Dimension inference and constant folding for a single expression.

#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dimcheck/lang/ast.hpp"
#include "dimcheck/unit_system.hpp"

namespace dimcheck::lang {

/// Inferred type of one expression node. `folded` is present when every
/// leaf below the node is a literal, unit or constant.
struct NodeType {
  DimVector dim;
  Precision prec = Precision::Double;
  std::optional<double> folded;
  std::int32_t slot = -1;  // variable references only
};

struct VarInfo {
  DimVector dim;
  Precision prec = Precision::Double;
  std::uint32_t slot = 0;
};

using VarTable = std::unordered_map<std::string, VarInfo>;

/// Thrown when an expression references a symbol whose own definition was
/// already diagnosed. Carries no diagnostic of its own.
struct PoisonedSymbol {
  std::string name;
};

struct Scope {
  const UnitSystem* units = nullptr;
  const VarTable* vars = nullptr;  // null: variables may not appear
  const std::unordered_set<std::string>* poisoned = nullptr;
  /// Pure unit expressions must fold; a DomainError while folding is then
  /// an error instead of being deferred to evaluation.
  bool require_fold = false;
};

class Typer {
 public:
  Typer(Scope scope, std::vector<NodeType>& nodes)
      : scope_(scope), nodes_(nodes) {}

  /// Throws Error (with the offending node's position) or PoisonedSymbol.
  const NodeType& infer(const Expr& e);

 private:
  NodeType infer_node(const Expr& e);
  NodeType ident(const Expr& e);

  Scope scope_;
  std::vector<NodeType>& nodes_;
};

/// Folds an expression made of literals, units and constants into a
/// quantity in the coherent representation.
Quantity fold(const UnitSystem& units, const Expr& e);

}  // namespace dimcheck::lang
