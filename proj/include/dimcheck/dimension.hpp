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

// Dimensions as exponent vectors and as packed integers.
//
// A dimension is the tuple of exponents of the base axes (length, mass,
// time, ...). The packed form stores the same tuple as one signed integer,
// one balanced digit per axis: code = sum_i e_i * radix^i. With radix 10 the
// length, mass and time axes have place values 1, 10 and 100.
//
// Balanced digits lie in [-(radix-1)/2, radix/2] (integer division), i.e.
// [-4, +5] for radix 10. Inside that range pack/unpack are exact inverses.
// Strict mode enforces the range; compat mode performs the raw integer
// arithmetic and lets out-of-range exponents alias onto neighbouring axes
// (length^10 and mass^1 share code 10).

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "dimcheck/error.hpp"

namespace dimcheck {

struct EncodingConfig {
  std::uint32_t axis_count = 7;
  std::int64_t radix = 10;
  bool strict = true;

  /// Throws std::invalid_argument for axis_count < 1 or radix < 3, and
  /// Error(CapacityOverflow) when radix^axis_count exceeds int64.
  void validate() const;

  std::int32_t digit_min() const noexcept {
    return static_cast<std::int32_t>(-((radix - 1) / 2));
  }
  std::int32_t digit_max() const noexcept {
    return static_cast<std::int32_t>(radix / 2);
  }
};

class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::size_t axis_count) : exps_(axis_count, 0) {}
  DimVector(std::initializer_list<std::int32_t> exps) : exps_(exps) {}
  explicit DimVector(std::vector<std::int32_t> exps) : exps_(std::move(exps)) {}

  static DimVector axis(std::size_t axis_count, std::size_t index);

  std::size_t size() const noexcept { return exps_.size(); }
  std::int32_t operator[](std::size_t i) const { return exps_[i]; }
  std::int32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::int32_t>& exponents() const noexcept { return exps_; }

  bool dimensionless() const noexcept;

  friend bool operator==(const DimVector&, const DimVector&) = default;

 private:
  std::vector<std::int32_t> exps_;
};

/// "(1,0,-1)"; used in error messages when no axis names are available.
std::string to_string(const DimVector& v);

struct PackedDim {
  std::int64_t code = 0;

  friend auto operator<=>(const PackedDim&, const PackedDim&) = default;
};

/// Raised when two operands must share a dimension and do not.
class DimensionMismatch : public Error {
 public:
  DimensionMismatch(DimVector lhs, DimVector rhs, const std::string& what);

  const DimVector& lhs() const noexcept { return lhs_; }
  const DimVector& rhs() const noexcept { return rhs_; }

 private:
  DimVector lhs_;
  DimVector rhs_;
};

DimVector dv_mul(const DimVector& a, const DimVector& b);
DimVector dv_div(const DimVector& a, const DimVector& b);
DimVector dv_pow(const DimVector& a, std::int32_t p, std::int32_t q,
                 const EncodingConfig& cfg = {});

PackedDim pack(const DimVector& v, const EncodingConfig& cfg);
DimVector unpack(PackedDim d, const EncodingConfig& cfg);

// Raw integer arithmetic on codes, as a template-based implementation
// performs it. Only int64 overflow is reported.
PackedDim p_add(PackedDim a, PackedDim b);
PackedDim p_sub(PackedDim a, PackedDim b);

// Mode-aware variants. Strict: unpack, apply the vector rule, repack with a
// range check. Compat: raw arithmetic, truncating division for p_scale.
PackedDim p_add(PackedDim a, PackedDim b, const EncodingConfig& cfg);
PackedDim p_sub(PackedDim a, PackedDim b, const EncodingConfig& cfg);
PackedDim p_scale(PackedDim a, std::int32_t p, std::int32_t q,
                  const EncodingConfig& cfg);

enum class Encoding : std::uint8_t { Vector, Packed };

std::string_view to_string(Encoding enc) noexcept;

/// Routes dimension arithmetic through either representation. The checker
/// and the checked evaluator do all of their dimension work through one of
/// these; an attached counter records every operation performed.
class DimAlgebra {
 public:
  DimAlgebra() = default;
  DimAlgebra(Encoding enc, EncodingConfig cfg);

  Encoding encoding() const noexcept { return enc_; }
  const EncodingConfig& config() const noexcept { return cfg_; }

  DimVector mul(const DimVector& a, const DimVector& b) const;
  DimVector div(const DimVector& a, const DimVector& b) const;
  DimVector pow(const DimVector& a, std::int32_t p, std::int32_t q) const;
  bool same(const DimVector& a, const DimVector& b) const;

  /// Validates a dimension entering the algebra from outside (strict packed
  /// mode rejects vectors with out-of-range exponents).
  const DimVector& admit(const DimVector& v) const;

  std::optional<PackedDim> code_of(const DimVector& v) const;

  DimAlgebra counting(std::uint64_t* counter) const;

 private:
  void tick() const noexcept {
    if (counter_ != nullptr) ++*counter_;
  }

  Encoding enc_ = Encoding::Vector;
  EncodingConfig cfg_{};
  std::uint64_t* counter_ = nullptr;
};

}  // namespace dimcheck
