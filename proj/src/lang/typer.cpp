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

#include "dimcheck/lang/typer.hpp"

namespace dimcheck::lang {
namespace {

std::optional<double> both(const NodeType& a, const NodeType& b,
                           double (*op)(double, double, Precision),
                           Precision p) {
  if (!a.folded || !b.folded) return std::nullopt;
  return op(*a.folded, *b.folded, p);
}

}  // namespace

const NodeType& Typer::infer(const Expr& e) {
  NodeType t;
  try {
    t = infer_node(e);
  } catch (Error& err) {
    err.set_pos(e.pos);
    throw;
  }
  if (nodes_.size() <= e.id) nodes_.resize(e.id + 1);
  nodes_[e.id] = std::move(t);
  return nodes_[e.id];
}

NodeType Typer::ident(const Expr& e) {
  const UnitSystem& units = *scope_.units;
  if (scope_.poisoned != nullptr && scope_.poisoned->contains(e.name)) {
    throw PoisonedSymbol{e.name};
  }
  if (const UnitDef* u = units.find_unit(e.name)) {
    return NodeType{u->dim, units.default_precision(), u->factor};
  }
  if (const ConstantDef* c = units.find_constant(e.name)) {
    return NodeType{c->value.dim, c->value.prec, c->value.value};
  }
  if (scope_.vars != nullptr) {
    if (auto it = scope_.vars->find(e.name); it != scope_.vars->end()) {
      const VarInfo& v = it->second;
      return NodeType{v.dim, v.prec, std::nullopt,
                      static_cast<std::int32_t>(v.slot)};
    }
  }
  throw Error(ErrorCode::UnknownUnit,
              "unknown unit or constant '" + e.name + "'", e.pos);
}

NodeType Typer::infer_node(const Expr& e) {
  const UnitSystem& units = *scope_.units;
  const DimAlgebra& alg = units.algebra();
  using K = Expr::Kind;

  switch (e.kind) {
    case K::Number:
      return NodeType{DimVector(units.axis_count()), units.default_precision(),
                      e.number};
    case K::Ident:
      return ident(e);
    case K::Neg: {
      NodeType t = infer(*e.lhs);
      if (t.folded) t.folded = arith::neg(*t.folded, t.prec);
      t.slot = -1;
      return t;
    }
    case K::Add:
    case K::Sub: {
      const NodeType l = infer(*e.lhs);
      const NodeType r = infer(*e.rhs);
      if (!alg.same(l.dim, r.dim)) {
        throw Error(ErrorCode::DimensionMismatch,
                    e.kind == K::Add
                        ? "cannot add " + units.render(l.dim) + " and " +
                              units.render(r.dim)
                        : "cannot subtract " + units.render(r.dim) +
                              " from " + units.render(l.dim),
                    e.pos);
      }
      const Precision p = promote(l.prec, r.prec);
      return NodeType{l.dim, p,
                      both(l, r, e.kind == K::Add ? arith::add : arith::sub,
                           p)};
    }
    case K::Mul:
    case K::Div: {
      const NodeType l = infer(*e.lhs);
      const NodeType r = infer(*e.rhs);
      const Precision p = promote(l.prec, r.prec);
      DimVector dim =
          e.kind == K::Mul ? alg.mul(l.dim, r.dim) : alg.div(l.dim, r.dim);
      return NodeType{std::move(dim), p,
                      both(l, r, e.kind == K::Mul ? arith::mul : arith::div,
                           p)};
    }
    case K::Sqrt: {
      const NodeType a = infer(*e.lhs);
      NodeType t{alg.pow(a.dim, 1, 2), a.prec, std::nullopt};
      if (a.folded) t.folded = arith::sqrt(*a.folded, a.prec);
      return t;
    }
    case K::Pow: {
      const NodeType a = infer(*e.lhs);
      NodeType t{alg.pow(a.dim, e.p, e.q), a.prec, std::nullopt};
      if (a.folded) {
        try {
          t.folded = arith::pow(*a.folded, e.p, e.q, a.prec);
        } catch (const Error&) {
          // evaluation reports it at run time
          if (scope_.require_fold) throw;
        }
      }
      return t;
    }
  }
  throw std::logic_error("unhandled expression kind");
}

Quantity fold(const UnitSystem& units, const Expr& e) {
  std::vector<NodeType> nodes;
  Typer typer(Scope{&units, nullptr, nullptr, true}, nodes);
  const NodeType& t = typer.infer(e);
  if (!t.folded) {
    throw Error(ErrorCode::UnknownUnit, "expression does not fold to a constant",
                e.pos);
  }
  return Quantity{*t.folded, t.prec, t.dim};
}

}  // namespace dimcheck::lang
