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


// Independent test-side oracles and random program generators. Nothing here
// calls into the library; dimensions are tracked on plain std::array.

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "support/programs.hpp"

namespace dimcheck::testing {

using Dim3 = std::array<int, 3>;  // length, mass, time

// sum_i e_i * radix^i, the definition of the packed code.
inline std::int64_t oracle_code(const std::vector<int>& exps,
                                std::int64_t radix) {
  std::int64_t code = 0;
  std::int64_t place = 1;
  for (int e : exps) {
    code += e * place;
    place *= radix;
  }
  return code;
}

// Inverts the packed code by exhaustive search over balanced 3-digit
// vectors at radix 10.
inline std::optional<Dim3> oracle_unpack3(std::int64_t code) {
  for (int a = -4; a <= 5; ++a) {
    for (int b = -4; b <= 5; ++b) {
      for (int c = -4; c <= 5; ++c) {
        if (a + 10 * b + 100 * c == code) return Dim3{a, b, c};
      }
    }
  }
  return std::nullopt;
}

// "m^2*kg*s^-2", or "1" when dimensionless.
inline std::string unit_expr(const Dim3& d, const char* l, const char* m,
                             const char* t) {
  const char* names[3] = {l, m, t};
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (d[i] != 1) out += "^" + std::to_string(d[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// Random dimension trees.

enum class Verdict { Ok, Mismatch, NonInteger, Capacity };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Ok: return "ok";
    case Verdict::Mismatch: return "DimensionMismatch";
    case Verdict::NonInteger: return "NonIntegerExponent";
    case Verdict::Capacity: return "CapacityOverflow";
  }
  return "?";
}

struct TreeOutcome {
  Verdict verdict = Verdict::Ok;
  Dim3 dim{};
};

struct DimTree {
  enum class Op { Leaf, Number, Mul, Div, Add, Sub, Neg, Pow, Sqrt };
  Op op = Op::Leaf;
  int leaf = 0;  // 0 m, 1 kg, 2 s
  int p = 1;
  int q = 1;
  std::unique_ptr<DimTree> a;
  std::unique_ptr<DimTree> b;

  std::unique_ptr<DimTree> clone() const {
    auto t = std::make_unique<DimTree>();
    t->op = op;
    t->leaf = leaf;
    t->p = p;
    t->q = q;
    if (a) t->a = a->clone();
    if (b) t->b = b->clone();
    return t;
  }

  int depth() const {
    int d = 0;
    if (a) d = a->depth();
    if (b && b->depth() > d) d = b->depth();
    return d + 1;
  }

  std::string text() const {
    static const char* const kLeaves[] = {"m", "kg", "s"};
    switch (op) {
      case Op::Leaf: return kLeaves[leaf];
      case Op::Number: return "2.5";
      case Op::Mul: return "(" + a->text() + " * " + b->text() + ")";
      case Op::Div: return "(" + a->text() + " / " + b->text() + ")";
      case Op::Add: return "(" + a->text() + " + " + b->text() + ")";
      case Op::Sub: return "(" + a->text() + " - " + b->text() + ")";
      case Op::Neg: return "-(" + a->text() + ")";
      case Op::Sqrt: return "sqrt(" + a->text() + ")";
      case Op::Pow:
        if (q == 1) return "(" + a->text() + ")^" + std::to_string(p);
        return "pow(" + a->text() + ", " + std::to_string(p) + ", " +
               std::to_string(q) + ")";
    }
    return "";
  }

  // Applies the dimension rules bottom-up, left operand first. `bounded`
  // enforces the strict radix-10 digit range [-4, 5] on every result.
  TreeOutcome eval(bool bounded) const {
    TreeOutcome r;
    switch (op) {
      case Op::Leaf:
        r.dim[leaf] = 1;
        return r;
      case Op::Number: return r;
      case Op::Neg: return a->eval(bounded);
      default: break;
    }
    const TreeOutcome x = a->eval(bounded);
    if (x.verdict != Verdict::Ok) return x;
    if (op == Op::Pow || op == Op::Sqrt) {
      const int pp = op == Op::Sqrt ? 1 : p;
      const int qq = op == Op::Sqrt ? 2 : q;
      for (int i = 0; i < 3; ++i) {
        if ((x.dim[i] * pp) % qq != 0) return {Verdict::NonInteger, {}};
        r.dim[i] = x.dim[i] * pp / qq;
      }
    } else {
      const TreeOutcome y = b->eval(bounded);
      if (y.verdict != Verdict::Ok) return y;
      if (op == Op::Add || op == Op::Sub) {
        if (x.dim != y.dim) return {Verdict::Mismatch, {}};
        return x;
      }
      for (int i = 0; i < 3; ++i) {
        r.dim[i] = op == Op::Mul ? x.dim[i] + y.dim[i] : x.dim[i] - y.dim[i];
      }
    }
    if (bounded) {
      for (int e : r.dim) {
        if (e < -4 || e > 5) return {Verdict::Capacity, {}};
      }
    }
    return r;
  }
};

// A tree of depth at most `depth`.
inline std::unique_ptr<DimTree> random_tree(std::mt19937_64& rng, int depth) {
  using Op = DimTree::Op;
  auto t = std::make_unique<DimTree>();
  const int roll = std::uniform_int_distribution<int>(0, 99)(rng);
  if (depth <= 1 || roll < 15) {
    t->op = roll % 7 == 0 ? Op::Number : Op::Leaf;
    t->leaf = roll % 3;
    return t;
  }
  t->a = random_tree(rng, depth - 1);
  if (roll < 40) {
    t->op = Op::Mul;
  } else if (roll < 60) {
    t->op = Op::Div;
  } else if (roll < 68) {
    t->op = Op::Add;
  } else if (roll < 72) {
    t->op = Op::Sub;
  } else if (roll < 76) {
    t->op = Op::Neg;
    return t;
  } else if (roll < 84) {
    t->op = Op::Sqrt;
    return t;
  } else {
    t->op = Op::Pow;
    t->p = std::uniform_int_distribution<int>(-3, 3)(rng);
    t->q = std::uniform_int_distribution<int>(1, 3)(rng);
    return t;
  }
  // Half of the sums get a copy of the left operand, so not every sum is a
  // mismatch.
  const bool sum = t->op == Op::Add || t->op == Op::Sub;
  if (sum && std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
    t->b = t->a->clone();
  } else {
    t->b = random_tree(rng, depth - 1);
  }
  return t;
}

// ---------------------------------------------------------------------------
// Random accepted programs.

// A generated program with every let annotated by its true dimension and
// every print target chosen to match. The checker must accept all of them.
struct GeneratedProgram {
  std::string source;
  std::size_t prints = 0;
};

class ProgramGenerator {
 public:
  explicit ProgramGenerator(std::uint64_t seed) : rng_(seed) {}

  GeneratedProgram next() {
    vars_.clear();
    GeneratedProgram g;
    g.source = kPrelude + "const c = 2.99792458e8 * m / s;\n";
    const int lets = uniform(3, 8);
    for (int i = 0; i < lets; ++i) {
      Dim3 d{};
      const std::string expr = expr_of(uniform(1, 5), d);
      const std::string name = "v" + std::to_string(i);
      std::string prec;
      if (uniform(0, 3) == 0) prec = " @single";
      if (uniform(0, 5) == 0) prec = " @double";
      g.source += "let " + name + " : " + unit_expr(d, "m", "kg", "s") + prec +
                  " = " + expr + ";\n";
      vars_.push_back({name, d});
      if (uniform(0, 2) != 0) {
        g.source += "print " + name + " in " + display_unit(d) + ";\n";
        ++g.prints;
      }
    }
    Dim3 d{};
    const std::string tail = expr_of(uniform(2, 4), d);
    g.source += "print " + tail + " in " + display_unit(d) + ";\n";
    ++g.prints;
    return g;
  }

 private:
  struct Var {
    std::string name;
    Dim3 dim;
  };

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  static bool fits(const Dim3& d) {
    for (int e : d) {
      if (e < -4 || e > 5) return false;
    }
    return true;
  }

  std::string display_unit(const Dim3& d) {
    switch (uniform(0, 2)) {
      case 0: return unit_expr(d, "m", "kg", "s");
      case 1: return unit_expr(d, "cm", "g", "hour");
      default: return unit_expr(d, "km", "kg", "s");
    }
  }

  std::string literal() {
    static const char* const kLits[] = {"2",    "0.5",    "9.81", "3.14159",
                                        "1e-3", "6.02e2", "1.75", "42"};
    return kLits[uniform(0, 7)];
  }

  std::string leaf(Dim3& d) {
    d = {};
    const int roll = uniform(0, 9);
    if (roll < 3 || (roll < 6 && vars_.empty())) return literal();
    if (roll < 6) {
      const Var& v = vars_[uniform(0, static_cast<int>(vars_.size()) - 1)];
      d = v.dim;
      return v.name;
    }
    static const char* const kUnits[] = {"m", "kg", "s", "cm", "km", "hour", "g", "c"};
    static const Dim3 kDims[] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0},
                                 {1, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, -1}};
    const int u = uniform(0, 7);
    d = kDims[u];
    return kUnits[u];
  }

  // Values stay positive: no negation, and differences subtract a fraction
  // of the same operand.
  std::string expr_of(int depth, Dim3& d) {
    if (depth <= 1) return leaf(d);
    Dim3 x{};
    const std::string a = expr_of(depth - 1, x);
    const int roll = uniform(0, 9);
    if (roll < 5) {
      Dim3 y{};
      const std::string b = expr_of(depth - 1, y);
      Dim3 r{};
      for (int i = 0; i < 3; ++i) {
        r[i] = roll < 3 ? x[i] + y[i] : x[i] - y[i];
      }
      if (fits(r)) {
        d = r;
        return "(" + a + (roll < 3 ? " * " : " / ") + b + ")";
      }
    } else if (roll < 6) {
      d = x;
      return "(" + a + " + " + literal() + "*" + a + ")";
    } else if (roll < 7) {
      d = x;
      return "(" + a + " - 0.25*" + a + ")";
    } else if (roll < 8) {
      const bool even = x[0] % 2 == 0 && x[1] % 2 == 0 && x[2] % 2 == 0;
      if (even) {
        d = {x[0] / 2, x[1] / 2, x[2] / 2};
        return "sqrt(" + a + ")";
      }
    } else {
      const int p = uniform(-2, 3);
      const Dim3 r{x[0] * p, x[1] * p, x[2] * p};
      if (fits(r)) {
        d = r;
        return "(" + a + ")^" + std::to_string(p);
      }
    }
    d = x;
    return a;
  }

  std::mt19937_64 rng_;
  std::vector<Var> vars_;
};

}  // namespace dimcheck::testing
