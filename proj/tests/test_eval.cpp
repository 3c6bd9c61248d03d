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


#include <cmath>
#include <cstdint>
#include <cstring>
#include <string>
#include <variant>
#include <vector>

#include "dimcheck/format.hpp"
#include "dimcheck/lang/eval.hpp"
#include "doctest.h"
#include "support/oracles.hpp"
#include "support/programs.hpp"

using namespace dimcheck;
using namespace dimcheck::lang;
using dimcheck::testing::kDerivedCorpus;
using dimcheck::testing::kListingF;
using dimcheck::testing::kPrelude;

namespace {

TypedProgram checked(const std::string& src, CheckOptions opts = {}) {
  CheckResult r = check_source(src, opts);
  REQUIRE(r.ok());
  return std::move(r.program);
}

std::vector<std::string> lines(const std::vector<OutputRecord>& recs) {
  std::vector<std::string> out;
  for (const auto& r : recs) out.push_back(format_output(r));
  return out;
}

// Dimension operations the checked evaluator must perform, counted from the
// syntax tree alone: one per arithmetic node, one per let check and one per
// print conversion.
std::uint64_t expected_ops(const Expr& e) {
  std::uint64_t n = 0;
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
    case Expr::Kind::Sqrt:
    case Expr::Kind::Pow: n = 1; break;
    default: break;
  }
  if (e.lhs) n += expected_ops(*e.lhs);
  if (e.rhs) n += expected_ops(*e.rhs);
  return n;
}

std::uint64_t expected_ops(const Program& p) {
  std::uint64_t n = 0;
  for (const Statement& s : p.statements) {
    if (const auto* let = std::get_if<LetDecl>(&s)) {
      n += expected_ops(*let->expr) + 1;
    } else if (const auto* pr = std::get_if<PrintStmt>(&s)) {
      n += expected_ops(*pr->expr) + 1;
    }
  }
  return n;
}

bool same_bits(double a, double b) {
  return std::memcmp(&a, &b, sizeof a) == 0;
}

}  // namespace

TEST_CASE("free fall evaluates to sqrt(2/9.81) seconds") {
  const TypedProgram tp = checked(kListingF);
  const auto recs = eval_checked(tp);
  REQUIRE(recs.size() == 1);
  const double oracle = std::sqrt(2.0 / 9.81);
  CHECK(recs[0].label == "t");
  CHECK(recs[0].unit_text == "s");
  CHECK(same_bits(recs[0].value, oracle));
  CHECK(format_output(recs[0]) == "t = " + format_number(oracle) + " s");
}

TEST_CASE("derived corpus outputs") {
  const TypedProgram tp = checked(kDerivedCorpus);
  const auto recs = eval_checked(tp);
  REQUIRE(recs.size() == 3);
  CHECK(recs[0].value == (1.0 + 75 * 0.01) / 0.01);
  CHECK(std::fabs(recs[0].value - 175.0) <= 175.0 * 1e-15);
  CHECK(recs[0].label == "(1*m + 75*cm)");
  CHECK(recs[1].value == 2.99792458e8);
  CHECK(format_output(recs[1]) == "c = 299792458 m/s");
  CHECK(recs[2].value == 2.0 * 2.99792458e8 * 2.99792458e8);
}

TEST_CASE("fast and checked evaluation agree bit for bit") {
  for (const std::string& src : {kListingF, kDerivedCorpus}) {
    const TypedProgram tp = checked(src);
    EvalStats cs;
    EvalStats fs;
    const auto a = eval_checked(tp, &cs);
    const auto b = eval_fast(tp, &fs);
    CHECK(lines(a) == lines(b));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(same_bits(a[i].value, b[i].value));
    }
    CHECK(fs.dim_ops == 0);
    CHECK(cs.dim_ops == expected_ops(tp.ast));
  }
}

TEST_CASE("the free-fall program costs 11 dimension operations") {
  EvalStats s;
  eval_checked(checked(kListingF), &s);
  CHECK(s.dim_ops == 11);
}

TEST_CASE("counter matches the syntax-tree oracle on generated programs") {
  dimcheck::testing::ProgramGenerator gen(31);
  for (int i = 0; i < 40; ++i) {
    const auto g = gen.next();
    const TypedProgram tp = checked(g.source);
    EvalStats s;
    eval_checked(tp, &s);
    CHECK(s.dim_ops == expected_ops(tp.ast));
  }
}

TEST_CASE("single precision lets round through float in both modes") {
  const std::string src = kPrelude +
                          "let x : m @single = 1*m/3;\n"
                          "print x in m;\n"
                          "let y : m = x + 1*m/3;\n"
                          "print y in m;\n";
  const TypedProgram tp = checked(src);
  const auto a = eval_checked(tp);
  const auto b = eval_fast(tp);
  REQUIRE(a.size() == 2);
  CHECK(a[0].value == static_cast<double>(static_cast<float>(1.0 / 3.0)));
  CHECK(lines(a) == lines(b));
  CHECK(a[1].value == static_cast<double>(static_cast<float>(1.0 / 3.0)) + 1.0 / 3.0);
}

TEST_CASE("default single precision applies to literals and units") {
  CheckOptions opts;
  opts.default_prec = Precision::Single;
  const TypedProgram tp = checked(kListingF, opts);
  const auto a = eval_checked(tp);
  const auto b = eval_fast(tp);
  CHECK(lines(a) == lines(b));
  CHECK(a[0].value == static_cast<double>(static_cast<float>(a[0].value)));
}

TEST_CASE("runtime domain errors carry a position in both modes") {
  const std::string src = kPrelude +
                          "let x : m^2 = 0*m^2 - 4*m^2;\n"
                          "let y : m = pow(x, 1, 2);\n"
                          "print y in m;\n";
  const TypedProgram tp = checked(src);
  for (ExecMode mode : {ExecMode::Checked, ExecMode::Fast}) {
    try {
      evaluate(tp, mode);
      FAIL("expected DomainError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DomainError);
      REQUIRE(e.pos().has_value());
      CHECK(e.pos()->line == 10);
    }
  }
}

TEST_CASE("a negative base in a pure unit expression is a check-time error") {
  const CheckResult r =
      check_source(kPrelude + "unit bad = pow(0*m^2 - 1*m^2, 1, 2);\n", {});
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].code == ErrorCode::DomainError);
}

TEST_CASE("dimensionless prints omit the unit") {
  const TypedProgram tp = checked(kPrelude + "print (1*hour)/(1*s) in 1;\n");
  const auto recs = eval_checked(tp);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].dimensionless);
  CHECK(format_output(recs[0]) == "(1*hour)/(1*s) = 3600");
}

TEST_CASE("bench reports structural zero overhead") {
  const TypedProgram tp = checked(kListingF);
  const BenchReport r = bench(tp, 1000);
  CHECK(r.iterations == 1000);
  CHECK(r.outputs_equal);
  CHECK(r.fast_dim_ops == 0);
  CHECK(r.checked_dim_ops == 11 * 1000);
}
