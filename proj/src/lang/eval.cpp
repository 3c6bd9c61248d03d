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

#include "dimcheck/lang/eval.hpp"

#include <bit>
#include <chrono>

#include "dimcheck/format.hpp"

namespace dimcheck::lang {
namespace {

class CheckedEvaluator {
 public:
  CheckedEvaluator(const TypedProgram& tp, std::uint64_t* counter)
      : tp_(tp),
        alg_(tp.units.algebra().counting(counter)),
        slots_(tp.slot_count) {}

  std::vector<OutputRecord> run() {
    std::vector<OutputRecord> out;
    for (std::size_t i = 0; i < tp_.ast.statements.size(); ++i) {
      const StatementInfo& info = tp_.statements[i];
      if (const auto* let = std::get_if<LetDecl>(&tp_.ast.statements[i])) {
        Quantity q = eval(*let->expr);
        if (!alg_.same(q.dim, info.dim)) {
          throw DimensionMismatch(q.dim, info.dim, "let '" + let->name + "'");
        }
        q.prec = info.prec;
        q.value = arith::round_to(info.prec, q.value);
        slots_[info.slot] = std::move(q);
      } else if (const auto* print =
                     std::get_if<PrintStmt>(&tp_.ast.statements[i])) {
        const Quantity q = eval(*print->expr);
        double v = 0.0;
        try {
          v = q_in(q, *info.unit, alg_);
        } catch (Error& err) {
          err.set_pos(print->in_pos);
          throw;
        }
        out.push_back({info.label, v, info.unit_text, q.dimensionless()});
      }
    }
    return out;
  }

 private:
  Quantity eval(const Expr& e) {
    try {
      return eval_node(e);
    } catch (Error& err) {
      err.set_pos(e.pos);
      throw;
    }
  }

  Quantity eval_node(const Expr& e) {
    using K = Expr::Kind;
    const NodeType& t = tp_.type_of(e);
    switch (e.kind) {
      case K::Number:
        return Quantity{e.number, t.prec, DimVector(tp_.units.axis_count())};
      case K::Ident:
        if (t.slot >= 0) return slots_[static_cast<std::size_t>(t.slot)];
        if (const UnitDef* u = tp_.units.find_unit(e.name)) {
          return tp_.units.as_quantity(*u);
        }
        return tp_.units.find_constant(e.name)->value;
      case K::Neg: return q_neg(eval(*e.lhs));
      case K::Add: return q_add(eval(*e.lhs), eval(*e.rhs), alg_);
      case K::Sub: return q_sub(eval(*e.lhs), eval(*e.rhs), alg_);
      case K::Mul: return q_mul(eval(*e.lhs), eval(*e.rhs), alg_);
      case K::Div: return q_div(eval(*e.lhs), eval(*e.rhs), alg_);
      case K::Sqrt: return q_sqrt(eval(*e.lhs), alg_);
      case K::Pow: return q_pow(eval(*e.lhs), e.p, e.q, alg_);
    }
    throw std::logic_error("unhandled expression kind");
  }

  const TypedProgram& tp_;
  DimAlgebra alg_;
  std::vector<Quantity> slots_;
};

// Sees only values, precisions and slots; has no dimension state at all.
class FastEvaluator {
 public:
  explicit FastEvaluator(const TypedProgram& tp)
      : tp_(tp), slots_(tp.slot_count, 0.0) {}

  std::vector<OutputRecord> run() {
    std::vector<OutputRecord> out;
    for (std::size_t i = 0; i < tp_.ast.statements.size(); ++i) {
      const StatementInfo& info = tp_.statements[i];
      if (const auto* let = std::get_if<LetDecl>(&tp_.ast.statements[i])) {
        slots_[info.slot] = arith::round_to(info.prec, eval(*let->expr));
      } else if (const auto* print =
                     std::get_if<PrintStmt>(&tp_.ast.statements[i])) {
        const double v =
            arith::div(eval(*print->expr), info.unit->factor, info.prec);
        out.push_back({info.label, v, info.unit_text, info.dim.dimensionless()});
      }
    }
    return out;
  }

 private:
  double eval(const Expr& e) {
    try {
      return eval_node(e);
    } catch (Error& err) {
      err.set_pos(e.pos);
      throw;
    }
  }

  double eval_node(const Expr& e) {
    using K = Expr::Kind;
    const NodeType& t = tp_.type_of(e);
    if (t.folded) return *t.folded;
    switch (e.kind) {
      case K::Number: return e.number;
      case K::Ident: return slots_[static_cast<std::size_t>(t.slot)];
      case K::Neg: return arith::neg(eval(*e.lhs), t.prec);
      case K::Add: return arith::add(eval(*e.lhs), eval(*e.rhs), t.prec);
      case K::Sub: return arith::sub(eval(*e.lhs), eval(*e.rhs), t.prec);
      case K::Mul: return arith::mul(eval(*e.lhs), eval(*e.rhs), t.prec);
      case K::Div: return arith::div(eval(*e.lhs), eval(*e.rhs), t.prec);
      case K::Sqrt: return arith::sqrt(eval(*e.lhs), t.prec);
      case K::Pow: return arith::pow(eval(*e.lhs), e.p, e.q, t.prec);
    }
    throw std::logic_error("unhandled expression kind");
  }

  const TypedProgram& tp_;
  std::vector<double> slots_;
};

bool same_bits(const std::vector<OutputRecord>& a,
               const std::vector<OutputRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::bit_cast<std::uint64_t>(a[i].value) !=
            std::bit_cast<std::uint64_t>(b[i].value) ||
        format_output(a[i]) != format_output(b[i])) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<OutputRecord> eval_checked(const TypedProgram& tp,
                                       EvalStats* stats) {
  std::uint64_t local = 0;
  std::uint64_t* counter = stats != nullptr ? &stats->dim_ops : &local;
  return CheckedEvaluator(tp, counter).run();
}

std::vector<OutputRecord> eval_fast(const TypedProgram& tp, EvalStats*) {
  return FastEvaluator(tp).run();
}

std::vector<OutputRecord> evaluate(const TypedProgram& tp, ExecMode mode,
                                   EvalStats* stats) {
  return mode == ExecMode::Checked ? eval_checked(tp, stats)
                                   : eval_fast(tp, stats);
}

std::string format_output(const OutputRecord& r) {
  std::string line = r.label + " = " + format_number(r.value);
  if (!r.dimensionless) line += " " + r.unit_text;
  return line;
}

BenchReport bench(const TypedProgram& tp, std::uint64_t iterations) {
  using clock = std::chrono::steady_clock;
  BenchReport report;
  report.iterations = iterations;

  std::vector<OutputRecord> checked_out;
  EvalStats checked_stats;
  auto start = clock::now();
  for (std::uint64_t i = 0; i < iterations; ++i) {
    checked_out = eval_checked(tp, &checked_stats);
  }
  report.checked_seconds =
      std::chrono::duration<double>(clock::now() - start).count();

  std::vector<OutputRecord> fast_out;
  EvalStats fast_stats;
  start = clock::now();
  for (std::uint64_t i = 0; i < iterations; ++i) {
    fast_out = eval_fast(tp, &fast_stats);
  }
  report.fast_seconds =
      std::chrono::duration<double>(clock::now() - start).count();

  report.checked_dim_ops = checked_stats.dim_ops;
  report.fast_dim_ops = fast_stats.dim_ops;
  report.outputs_equal = same_bits(checked_out, fast_out);
  return report;
}

}  // namespace dimcheck::lang
