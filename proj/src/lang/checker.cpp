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

#include "dimcheck/lang/checker.hpp"

#include <cmath>
#include <unordered_set>

#include "dimcheck/lang/parser.hpp"

namespace dimcheck::lang {
namespace {

class Checker {
 public:
  Checker(TypedProgram& tp, Diagnostics& diags, std::string file)
      : tp_(tp), diags_(diags), file_(std::move(file)) {}

  void run() {
    tp_.nodes.assign(tp_.ast.node_count, NodeType{});
    tp_.statements.assign(tp_.ast.statements.size(), StatementInfo{});
    for (std::size_t i = 0; i < tp_.ast.statements.size(); ++i) {
      std::visit([&](const auto& s) { statement(s, tp_.statements[i]); },
                 tp_.ast.statements[i]);
    }
    tp_.slot_count = next_slot_;
  }

 private:
  void report(ErrorCode code, SourcePos pos, std::string message) {
    diags_.push_back({file_, pos, code, std::move(message)});
  }

  void report(const Error& err, SourcePos fallback) {
    report(err.code(), err.pos().value_or(fallback), err.what());
  }

  Scope scope(bool with_vars, bool require_fold = false) const {
    return Scope{&tp_.units, with_vars ? &vars_ : nullptr, &poisoned_,
                 require_fold};
  }

  bool taken(const std::string& name) const {
    return tp_.units.defines(name) || vars_.contains(name) ||
           poisoned_.contains(name);
  }

  bool claim(const std::string& name, SourcePos pos) {
    if (!taken(name)) return true;
    report(ErrorCode::Redefinition, pos, "'" + name + "' is already defined");
    return false;
  }

  // Runs `body`, turning failures into diagnostics. Returns false on failure.
  template <typename F>
  bool guarded(SourcePos fallback, F&& body) {
    try {
      body();
      return true;
    } catch (const PoisonedSymbol&) {
      return false;
    } catch (const Error& err) {
      report(err, fallback);
      return false;
    }
  }

  void statement(const DimDecl& d, StatementInfo&) {
    guarded(d.name_pos, [&] { tp_.units.define_axis(d.name); });
  }

  void statement(const BaseUnitDecl& d, StatementInfo&) {
    if (!claim(d.symbol, d.symbol_pos)) return;
    const bool ok = guarded(d.pos, [&] {
      if (!tp_.units.find_axis(d.axis)) {
        throw Error(ErrorCode::UnknownAxis,
                    "unknown axis '" + d.axis + "'", d.axis_pos);
      }
      try {
        tp_.units.define_base_unit(d.symbol, d.axis, d.factor);
      } catch (Error& err) {
        if (err.code() == ErrorCode::InvalidFactor) err.set_pos(d.factor_pos);
        throw;
      }
    });
    if (!ok) poisoned_.insert(d.symbol);
  }

  template <typename Decl>
  void definition(const Decl& d, bool is_unit) {
    if (!claim(d.symbol, d.symbol_pos)) return;
    const bool ok = guarded(d.pos, [&] {
      Typer typer(scope(false, true), tp_.nodes);
      const NodeType t = typer.infer(*d.expr);
      if (!t.folded) {
        throw Error(ErrorCode::UnknownUnit,
                    "'" + d.symbol + "' must be defined from units, "
                    "constants and numbers only", d.expr->pos);
      }
      const Quantity q{*t.folded, t.prec, t.dim};
      try {
        if (is_unit) {
          tp_.units.define_derived_unit(d.symbol, q);
        } else {
          tp_.units.define_constant(d.symbol, q);
        }
      } catch (Error& err) {
        err.set_pos(d.expr->pos);
        throw;
      }
    });
    if (!ok) poisoned_.insert(d.symbol);
  }

  void statement(const UnitDecl& d, StatementInfo&) { definition(d, true); }
  void statement(const ConstDecl& d, StatementInfo&) { definition(d, false); }

  void statement(const LetDecl& d, StatementInfo& info) {
    if (!claim(d.name, d.name_pos)) return;
    std::optional<DimVector> declared;
    guarded(d.annotation->pos, [&] {
      Typer typer(scope(true), tp_.nodes);
      declared = typer.infer(*d.annotation).dim;
    });
    if (!declared) {
      poisoned_.insert(d.name);
      return;
    }
    guarded(d.expr->pos, [&] {
      Typer typer(scope(true), tp_.nodes);
      const NodeType value = typer.infer(*d.expr);
      if (!tp_.units.algebra().same(value.dim, *declared)) {
        throw Error(ErrorCode::DimensionMismatch,
                    "'" + d.name + "' is declared as " +
                        tp_.units.render(*declared) +
                        " but its value has dimension " +
                        tp_.units.render(value.dim),
                    d.pos);
      }
    });
    // the declared dimension stands even if the value was wrong, so later
    // statements are checked against what the author meant
    info.slot = next_slot_++;
    info.prec = d.prec.value_or(tp_.units.default_precision());
    info.dim = *declared;
    vars_.emplace(d.name, VarInfo{*declared, info.prec, info.slot});
  }

  void statement(const PrintStmt& s, StatementInfo& info) {
    guarded(s.pos, [&] {
      Typer value_typer(scope(true), tp_.nodes);
      const NodeType value = value_typer.infer(*s.expr);
      Typer unit_typer(scope(false, true), tp_.nodes);
      const NodeType unit = unit_typer.infer(*s.unit);
      if (!unit.folded) {
        throw Error(ErrorCode::UnknownUnit,
                    "print target must be built from units, constants and "
                    "numbers", s.unit->pos);
      }
      if (!std::isfinite(*unit.folded) || *unit.folded <= 0.0) {
        throw Error(ErrorCode::InvalidFactor,
                    "print target '" + std::string(tp_.ast.text(*s.unit)) +
                        "' has non-positive factor",
                    s.unit->pos);
      }
      if (!tp_.units.algebra().same(value.dim, unit.dim)) {
        throw Error(ErrorCode::DimensionMismatch,
                    "cannot express " + tp_.units.render(value.dim) + " in '" +
                        std::string(tp_.ast.text(*s.unit)) + "' (" +
                        tp_.units.render(unit.dim) + ")",
                    s.in_pos);
      }
      info.prec = value.prec;
      info.dim = value.dim;
      info.unit_text = tp_.ast.text(*s.unit);
      info.unit = UnitDef{info.unit_text, unit.dim, *unit.folded};
      info.label = s.expr->kind == Expr::Kind::Ident
                       ? s.expr->name
                       : std::string(tp_.ast.text(*s.expr));
    });
  }

  TypedProgram& tp_;
  Diagnostics& diags_;
  std::string file_;
  VarTable vars_;
  std::unordered_set<std::string> poisoned_;
  std::uint32_t next_slot_ = 0;
};

}  // namespace

CheckResult check(Program ast, const CheckOptions& opts) {
  CheckResult out{
      TypedProgram{std::move(ast),
                   UnitSystem(opts.cfg, opts.encoding, opts.default_prec),
                   {}, {}, 0},
      {}};
  Checker(out.program, out.diagnostics, opts.file).run();
  return out;
}

CheckResult check_source(std::string source, const CheckOptions& opts) {
  ParseResult parsed = parse_program(std::move(source));
  if (!parsed.ok()) {
    CheckResult out{
        TypedProgram{std::move(parsed.program),
                     UnitSystem(opts.cfg, opts.encoding, opts.default_prec),
                     {}, {}, 0},
        std::move(parsed.diagnostics)};
    for (Diagnostic& d : out.diagnostics) d.file = opts.file;
    return out;
  }
  return check(std::move(parsed.program), opts);
}

}  // namespace dimcheck::lang
