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

// Registry of axes, units and named constants.
//
// Every stored value is expressed in the coherent representation fixed by
// the base-unit factors: with `m = base(length, 1)` and `g = base(mass,
// 1e-3)` internal numbers are meters and kilograms, and a unit symbol is just
// the conversion factor into that representation.

#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dimcheck/dimension.hpp"
#include "dimcheck/quantity.hpp"

namespace dimcheck {

struct UnitDef {
  std::string symbol;
  DimVector dim;
  double factor = 1.0;
};

struct ConstantDef {
  std::string symbol;
  Quantity value;
};

class UnitSystem {
 public:
  enum class EntryKind : std::uint8_t { Unit, Constant };
  struct Entry {
    EntryKind kind;
    std::size_t index;
  };

  explicit UnitSystem(EncodingConfig cfg = {},
                      Encoding enc = Encoding::Packed,
                      Precision default_prec = Precision::Double);

  const EncodingConfig& config() const noexcept { return algebra_.config(); }
  const DimAlgebra& algebra() const noexcept { return algebra_; }
  Precision default_precision() const noexcept { return default_prec_; }
  std::size_t axis_count() const noexcept { return config().axis_count; }
  const std::vector<std::string>& axes() const noexcept { return axes_; }

  std::size_t define_axis(std::string_view name);
  const UnitDef& define_base_unit(std::string_view symbol,
                                  std::string_view axis, double factor);
  const UnitDef& define_derived_unit(std::string_view symbol,
                                     const Quantity& folded);
  /// Parses and folds a unit expression such as "kg*m^2/s^2".
  const UnitDef& define_derived_unit(std::string_view symbol,
                                     std::string_view expr);
  const ConstantDef& define_constant(std::string_view symbol,
                                     const Quantity& folded);
  const ConstantDef& define_constant(std::string_view symbol,
                                     std::string_view expr);

  std::optional<std::size_t> find_axis(std::string_view name) const;
  const UnitDef* find_unit(std::string_view symbol) const;
  const ConstantDef* find_constant(std::string_view symbol) const;
  bool defines(std::string_view symbol) const;

  /// The unit as a value: its factor, tagged with the default precision.
  Quantity as_quantity(const UnitDef& u) const;

  /// Definition order of units and constants.
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  const UnitDef& unit_at(std::size_t i) const { return units_.at(i); }
  const ConstantDef& constant_at(std::size_t i) const {
    return constants_.at(i);
  }

  /// "m^2 kg^1 s^-2"; "1" for dimensionless.
  std::string render(const DimVector& dim) const;
  std::string axis_symbol(std::size_t axis) const;

 private:
  void claim(std::string_view symbol) const;
  void require_known_axes(const DimVector& dim, std::string_view symbol) const;

  DimAlgebra algebra_;
  Precision default_prec_;
  std::vector<std::string> axes_;
  std::vector<std::optional<std::size_t>> axis_base_;
  std::deque<UnitDef> units_;
  std::deque<ConstantDef> constants_;
  std::vector<Entry> entries_;
  std::unordered_map<std::string, Entry> by_symbol_;
};

}  // namespace dimcheck
