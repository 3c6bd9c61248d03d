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

#include "dimcheck/dimension.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dimcheck {
namespace {

__extension__ using wide = __int128;

constexpr wide kCodeMin = std::numeric_limits<std::int64_t>::min();
constexpr wide kCodeMax = std::numeric_limits<std::int64_t>::max();

std::int64_t narrow_code(wide v, const char* what) {
  if (v < kCodeMin || v > kCodeMax) {
    throw Error(ErrorCode::CapacityOverflow,
                std::string(what) + ": packed code exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

std::int32_t narrow_exponent(std::int64_t v) {
  if (v < std::numeric_limits<std::int32_t>::min() ||
      v > std::numeric_limits<std::int32_t>::max()) {
    throw Error(ErrorCode::CapacityOverflow, "dimension exponent overflow");
  }
  return static_cast<std::int32_t>(v);
}

void require_same_size(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dimension vectors differ in axis count (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  }
}

void require_denominator(std::int32_t q) {
  if (q < 1) throw std::invalid_argument("power denominator must be >= 1");
}

}  // namespace

void EncodingConfig::validate() const {
  if (axis_count < 1) throw std::invalid_argument("axis_count must be >= 1");
  if (radix < 3) throw std::invalid_argument("radix must be >= 3");
  wide span = 1;
  for (std::uint32_t i = 0; i < axis_count; ++i) {
    span *= radix;
    if (span > kCodeMax) {
      throw Error(ErrorCode::CapacityOverflow,
                  "radix " + std::to_string(radix) + " with " +
                      std::to_string(axis_count) +
                      " axes does not fit a 64-bit packed code");
    }
  }
}

DimVector DimVector::axis(std::size_t axis_count, std::size_t index) {
  DimVector v(axis_count);
  v.exps_.at(index) = 1;
  return v;
}

bool DimVector::dimensionless() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](std::int32_t e) { return e == 0; });
}

std::string to_string(const DimVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  out += ')';
  return out;
}

DimensionMismatch::DimensionMismatch(DimVector lhs, DimVector rhs,
                                     const std::string& what)
    : Error(ErrorCode::DimensionMismatch,
            what + ": " + to_string(lhs) + " vs " + to_string(rhs)),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {}

DimVector dv_mul(const DimVector& a, const DimVector& b) {
  require_same_size(a, b);
  DimVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = narrow_exponent(std::int64_t{a[i]} + b[i]);
  }
  return out;
}

DimVector dv_div(const DimVector& a, const DimVector& b) {
  require_same_size(a, b);
  DimVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = narrow_exponent(std::int64_t{a[i]} - b[i]);
  }
  return out;
}

DimVector dv_pow(const DimVector& a, std::int32_t p, std::int32_t q,
                 const EncodingConfig& cfg) {
  require_denominator(q);
  if (!cfg.strict) {
    EncodingConfig sized = cfg;
    sized.axis_count = static_cast<std::uint32_t>(a.size());
    return unpack(p_scale(pack(a, sized), p, q, sized), sized);
  }
  DimVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t scaled = std::int64_t{a[i]} * p;
    if (scaled % q != 0) {
      throw Error(ErrorCode::NonIntegerExponent,
                  "exponent " + std::to_string(a[i]) + " * " +
                      std::to_string(p) + "/" + std::to_string(q) +
                      " is not an integer");
    }
    out[i] = narrow_exponent(scaled / q);
  }
  return out;
}

PackedDim pack(const DimVector& v, const EncodingConfig& cfg) {
  if (v.size() != cfg.axis_count) {
    throw std::invalid_argument("dimension has " + std::to_string(v.size()) +
                                " axes, encoding expects " +
                                std::to_string(cfg.axis_count));
  }
  wide code = 0;
  wide place = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (cfg.strict && (v[i] < cfg.digit_min() || v[i] > cfg.digit_max())) {
      throw Error(ErrorCode::CapacityOverflow,
                  "exponent " + std::to_string(v[i]) + " on axis " +
                      std::to_string(i) + " outside packed digit range [" +
                      std::to_string(cfg.digit_min()) + ", " +
                      std::to_string(cfg.digit_max()) + "]");
    }
    code += wide{v[i]} * place;
    if (code < kCodeMin || code > kCodeMax) narrow_code(code, "pack");
    place *= cfg.radix;
  }
  return PackedDim{static_cast<std::int64_t>(code)};
}

DimVector unpack(PackedDim d, const EncodingConfig& cfg) {
  DimVector out(cfg.axis_count);
  wide rest = d.code;
  for (std::uint32_t i = 0; i < cfg.axis_count; ++i) {
    wide digit = rest % cfg.radix;
    if (digit < 0) digit += cfg.radix;
    if (digit > cfg.digit_max()) digit -= cfg.radix;
    out[i] = static_cast<std::int32_t>(digit);
    rest = (rest - digit) / cfg.radix;
  }
  if (rest != 0) {
    throw Error(ErrorCode::CapacityOverflow,
                "packed code " + std::to_string(d.code) + " has digits beyond " +
                    std::to_string(cfg.axis_count) + " axes");
  }
  return out;
}

PackedDim p_add(PackedDim a, PackedDim b) {
  return PackedDim{narrow_code(wide{a.code} + b.code, "p_add")};
}

PackedDim p_sub(PackedDim a, PackedDim b) {
  return PackedDim{narrow_code(wide{a.code} - b.code, "p_sub")};
}

PackedDim p_add(PackedDim a, PackedDim b, const EncodingConfig& cfg) {
  if (!cfg.strict) return p_add(a, b);
  return pack(dv_mul(unpack(a, cfg), unpack(b, cfg)), cfg);
}

PackedDim p_sub(PackedDim a, PackedDim b, const EncodingConfig& cfg) {
  if (!cfg.strict) return p_sub(a, b);
  return pack(dv_div(unpack(a, cfg), unpack(b, cfg)), cfg);
}

PackedDim p_scale(PackedDim a, std::int32_t p, std::int32_t q,
                  const EncodingConfig& cfg) {
  require_denominator(q);
  if (cfg.strict) return pack(dv_pow(unpack(a, cfg), p, q, cfg), cfg);
  // C++ integer division truncates toward zero, as the template arithmetic
  // (pa*n)/pb does.
  return PackedDim{narrow_code((wide{a.code} * p) / q, "p_scale")};
}

std::string_view to_string(Encoding enc) noexcept {
  return enc == Encoding::Vector ? "vector" : "packed";
}

DimAlgebra::DimAlgebra(Encoding enc, EncodingConfig cfg)
    : enc_(enc), cfg_(cfg) {
  if (enc_ == Encoding::Packed) {
    cfg_.validate();
  } else if (cfg_.axis_count < 1) {
    throw std::invalid_argument("axis_count must be >= 1");
  }
  if (enc_ == Encoding::Vector && !cfg_.strict) {
    throw std::invalid_argument("compat mode requires the packed encoding");
  }
}

DimVector DimAlgebra::mul(const DimVector& a, const DimVector& b) const {
  tick();
  if (enc_ == Encoding::Vector) return dv_mul(a, b);
  return unpack(p_add(pack(a, cfg_), pack(b, cfg_), cfg_), cfg_);
}

DimVector DimAlgebra::div(const DimVector& a, const DimVector& b) const {
  tick();
  if (enc_ == Encoding::Vector) return dv_div(a, b);
  return unpack(p_sub(pack(a, cfg_), pack(b, cfg_), cfg_), cfg_);
}

DimVector DimAlgebra::pow(const DimVector& a, std::int32_t p,
                          std::int32_t q) const {
  tick();
  if (enc_ == Encoding::Vector) return dv_pow(a, p, q, cfg_);
  return unpack(p_scale(pack(a, cfg_), p, q, cfg_), cfg_);
}

bool DimAlgebra::same(const DimVector& a, const DimVector& b) const {
  tick();
  if (enc_ == Encoding::Vector) {
    require_same_size(a, b);
    return a == b;
  }
  return pack(a, cfg_) == pack(b, cfg_);
}

const DimVector& DimAlgebra::admit(const DimVector& v) const {
  if (enc_ == Encoding::Packed) pack(v, cfg_);
  return v;
}

std::optional<PackedDim> DimAlgebra::code_of(const DimVector& v) const {
  if (enc_ != Encoding::Packed) return std::nullopt;
  return pack(v, cfg_);
}

DimAlgebra DimAlgebra::counting(std::uint64_t* counter) const {
  DimAlgebra out = *this;
  out.counter_ = counter;
  return out;
}

}  // namespace dimcheck
