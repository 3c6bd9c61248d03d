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

#include <compare>
#include <cstdint>
#include <string_view>

#include "dimcheck/dimension.hpp"

namespace dimcheck {

/// Nominal floating-point width. Values are always stored as double; a
/// Single tag rounds every result through float.
enum class Precision : std::uint8_t { Single, Double };

constexpr Precision promote(Precision a, Precision b) noexcept {
  return a < b ? b : a;
}

std::string_view to_string(Precision p) noexcept;

struct UnitDef;

struct Quantity {
  double value = 0.0;
  Precision prec = Precision::Double;
  DimVector dim;

  static Quantity number(double v, std::size_t axis_count,
                         Precision prec = Precision::Double) {
    return Quantity{v, prec, DimVector(axis_count)};
  }

  bool dimensionless() const noexcept { return dim.dimensionless(); }
};

// Value kernels shared by the checked evaluator, the fast evaluator and
// constant folding. All three must produce bit-identical results, so every
// floating-point operation in the library goes through these.
namespace arith {

double round_to(Precision p, double v) noexcept;

double add(double a, double b, Precision p) noexcept;
double sub(double a, double b, Precision p) noexcept;
double mul(double a, double b, Precision p) noexcept;
double div(double a, double b, Precision p) noexcept;
double neg(double a, Precision p) noexcept;
double sqrt(double a, Precision p) noexcept;

/// a^(p/q). q in {1, 2, 3} use repeated multiplication on top of
/// identity/sqrt/cbrt; other denominators fall back to std::pow. Throws
/// Error(DomainError) for a negative base with an even (reduced) q.
double pow(double a, std::int32_t p, std::int32_t q, Precision prec);

/// Which kernel pow() takes for a reduced exponent.
enum class PowPath : std::uint8_t { Multiply, Sqrt, Cbrt, General };
PowPath pow_path(std::int32_t p, std::int32_t q) noexcept;

}  // namespace arith

Quantity q_add(const Quantity& a, const Quantity& b,
               const DimAlgebra& alg = {});
Quantity q_sub(const Quantity& a, const Quantity& b,
               const DimAlgebra& alg = {});
Quantity q_mul(const Quantity& a, const Quantity& b,
               const DimAlgebra& alg = {});
Quantity q_div(const Quantity& a, const Quantity& b,
               const DimAlgebra& alg = {});
Quantity q_neg(const Quantity& a);
Quantity q_sqrt(const Quantity& a, const DimAlgebra& alg = {});
Quantity q_pow(const Quantity& a, std::int32_t p, std::int32_t q,
               const DimAlgebra& alg = {});

/// Orders two same-dimension quantities by their coherent values. Throws
/// DimensionMismatch, or Error(DomainError) when either value is NaN.
std::strong_ordering q_cmp(const Quantity& a, const Quantity& b,
                           const DimAlgebra& alg = {});

/// Expresses a in unit u: a.value / u.factor.
double q_in(const Quantity& a, const UnitDef& u, const DimAlgebra& alg = {});

}  // namespace dimcheck
