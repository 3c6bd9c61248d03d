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

#include "dimcheck/quantity.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "dimcheck/unit_system.hpp"

namespace dimcheck {

std::string_view to_string(Precision p) noexcept {
  return p == Precision::Single ? "single" : "double";
}

namespace arith {

double round_to(Precision p, double v) noexcept {
  return p == Precision::Single ? static_cast<double>(static_cast<float>(v))
                                : v;
}

double add(double a, double b, Precision p) noexcept {
  return round_to(p, a + b);
}
double sub(double a, double b, Precision p) noexcept {
  return round_to(p, a - b);
}
double mul(double a, double b, Precision p) noexcept {
  return round_to(p, a * b);
}
double div(double a, double b, Precision p) noexcept {
  return round_to(p, a / b);
}
double neg(double a, Precision p) noexcept { return round_to(p, -a); }
double sqrt(double a, Precision p) noexcept {
  return round_to(p, std::sqrt(a));
}

PowPath pow_path(std::int32_t p, std::int32_t q) noexcept {
  const std::int32_t g = std::gcd(p, q);
  if (g > 1) q /= g;
  switch (q) {
    case 1: return PowPath::Multiply;
    case 2: return PowPath::Sqrt;
    case 3: return PowPath::Cbrt;
    default: return PowPath::General;
  }
}

namespace {

double integer_power(double base, std::int64_t n, Precision prec) {
  if (n == 0) return 1.0;
  const std::int64_t count = n < 0 ? -n : n;
  double r = base;
  for (std::int64_t i = 1; i < count; ++i) r = mul(r, base, prec);
  return n < 0 ? div(1.0, r, prec) : r;
}

}  // namespace

double pow(double a, std::int32_t p, std::int32_t q, Precision prec) {
  if (q < 1) throw std::invalid_argument("power denominator must be >= 1");
  std::int64_t num = p;
  std::int64_t den = q;
  if (const std::int64_t g = std::gcd(num, den); g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) return 1.0;
  if (den % 2 == 0 && a < 0.0) {
    throw Error(ErrorCode::DomainError,
                "negative base raised to " + std::to_string(p) + "/" +
                    std::to_string(q) + " has no real value");
  }
  switch (den) {
    case 1: return integer_power(a, num, prec);
    case 2: return integer_power(round_to(prec, std::sqrt(a)), num, prec);
    case 3: return integer_power(round_to(prec, std::cbrt(a)), num, prec);
    default: break;
  }
  const double exponent = static_cast<double>(num) / static_cast<double>(den);
  if (a < 0.0) {
    // odd denominator: real root exists, sign follows the numerator
    const double mag = std::pow(-a, exponent);
    return round_to(prec, (num % 2 != 0) ? -mag : mag);
  }
  return round_to(prec, std::pow(a, exponent));
}

}  // namespace arith

namespace {

void require_same(const Quantity& a, const Quantity& b, const DimAlgebra& alg,
                  const char* what) {
  if (!alg.same(a.dim, b.dim)) throw DimensionMismatch(a.dim, b.dim, what);
}

}  // namespace

Quantity q_add(const Quantity& a, const Quantity& b, const DimAlgebra& alg) {
  require_same(a, b, alg, "cannot add quantities of different dimension");
  const Precision p = promote(a.prec, b.prec);
  return Quantity{arith::add(a.value, b.value, p), p, a.dim};
}

Quantity q_sub(const Quantity& a, const Quantity& b, const DimAlgebra& alg) {
  require_same(a, b, alg, "cannot subtract quantities of different dimension");
  const Precision p = promote(a.prec, b.prec);
  return Quantity{arith::sub(a.value, b.value, p), p, a.dim};
}

Quantity q_mul(const Quantity& a, const Quantity& b, const DimAlgebra& alg) {
  const Precision p = promote(a.prec, b.prec);
  return Quantity{arith::mul(a.value, b.value, p), p, alg.mul(a.dim, b.dim)};
}

Quantity q_div(const Quantity& a, const Quantity& b, const DimAlgebra& alg) {
  const Precision p = promote(a.prec, b.prec);
  return Quantity{arith::div(a.value, b.value, p), p, alg.div(a.dim, b.dim)};
}

Quantity q_neg(const Quantity& a) {
  return Quantity{arith::neg(a.value, a.prec), a.prec, a.dim};
}

Quantity q_sqrt(const Quantity& a, const DimAlgebra& alg) {
  DimVector dim = alg.pow(a.dim, 1, 2);
  return Quantity{arith::sqrt(a.value, a.prec), a.prec, std::move(dim)};
}

Quantity q_pow(const Quantity& a, std::int32_t p, std::int32_t q,
               const DimAlgebra& alg) {
  DimVector dim = alg.pow(a.dim, p, q);
  return Quantity{arith::pow(a.value, p, q, a.prec), a.prec, std::move(dim)};
}

std::strong_ordering q_cmp(const Quantity& a, const Quantity& b,
                           const DimAlgebra& alg) {
  require_same(a, b, alg, "cannot compare quantities of different dimension");
  if (std::isnan(a.value) || std::isnan(b.value)) {
    throw Error(ErrorCode::DomainError, "comparison involves NaN");
  }
  if (a.value < b.value) return std::strong_ordering::less;
  if (a.value > b.value) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double q_in(const Quantity& a, const UnitDef& u, const DimAlgebra& alg) {
  if (!alg.same(a.dim, u.dim)) {
    throw DimensionMismatch(a.dim, u.dim,
                            "cannot express quantity in unit '" + u.symbol +
                                "'");
  }
  return arith::div(a.value, u.factor, a.prec);
}

}  // namespace dimcheck
