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

#include "dimcheck/unit_system.hpp"

#include <cmath>
#include <stdexcept>

#include "dimcheck/lang/parser.hpp"
#include "dimcheck/lang/typer.hpp"

namespace dimcheck {
namespace {

bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto start = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  if (!start(s.front())) return false;
  for (char c : s) {
    if (!start(c) && !(c >= '0' && c <= '9')) return false;
  }
  return true;
}

void require_factor(double factor, std::string_view symbol) {
  if (!std::isfinite(factor) || factor <= 0.0) {
    throw Error(ErrorCode::InvalidFactor,
                "unit '" + std::string(symbol) +
                    "' needs a positive finite factor, got " +
                    std::to_string(factor));
  }
}

}  // namespace

UnitSystem::UnitSystem(EncodingConfig cfg, Encoding enc,
                       Precision default_prec)
    : algebra_(enc, cfg), default_prec_(default_prec) {}

void UnitSystem::claim(std::string_view symbol) const {
  if (!valid_identifier(symbol)) {
    throw std::invalid_argument("'" + std::string(symbol) +
                                "' is not an identifier");
  }
  if (defines(symbol)) {
    throw Error(ErrorCode::Redefinition,
                "'" + std::string(symbol) + "' is already defined");
  }
}

void UnitSystem::require_known_axes(const DimVector& dim,
                                    std::string_view symbol) const {
  if (dim.size() != axis_count()) {
    throw std::invalid_argument("dimension of '" + std::string(symbol) +
                                "' has the wrong axis count");
  }
  for (std::size_t i = 0; i < dim.size(); ++i) {
    if (dim[i] != 0 && (i >= axes_.size() || !axis_base_[i])) {
      throw Error(ErrorCode::UnknownAxis,
                  "'" + std::string(symbol) + "' uses axis " +
                      std::to_string(i) + ", which has no base unit");
    }
  }
  algebra_.admit(dim);
}

std::size_t UnitSystem::define_axis(std::string_view name) {
  if (!valid_identifier(name)) {
    throw std::invalid_argument("'" + std::string(name) +
                                "' is not an identifier");
  }
  if (find_axis(name)) {
    throw Error(ErrorCode::Redefinition,
                "axis '" + std::string(name) + "' is already defined");
  }
  if (axes_.size() >= axis_count()) {
    throw Error(ErrorCode::CapacityOverflow,
                "cannot add axis '" + std::string(name) + "': encoding holds " +
                    std::to_string(axis_count()) + " axes");
  }
  axes_.emplace_back(name);
  axis_base_.emplace_back();
  return axes_.size() - 1;
}

const UnitDef& UnitSystem::define_base_unit(std::string_view symbol,
                                            std::string_view axis,
                                            double factor) {
  claim(symbol);
  const auto index = find_axis(axis);
  if (!index) {
    throw Error(ErrorCode::UnknownAxis,
                "unknown axis '" + std::string(axis) + "'");
  }
  require_factor(factor, symbol);
  units_.push_back(
      UnitDef{std::string(symbol), DimVector::axis(axis_count(), *index),
              factor});
  if (!axis_base_[*index]) axis_base_[*index] = units_.size() - 1;
  const Entry e{EntryKind::Unit, units_.size() - 1};
  entries_.push_back(e);
  by_symbol_.emplace(symbol, e);
  return units_.back();
}

const UnitDef& UnitSystem::define_derived_unit(std::string_view symbol,
                                               const Quantity& folded) {
  claim(symbol);
  require_factor(folded.value, symbol);
  require_known_axes(folded.dim, symbol);
  units_.push_back(UnitDef{std::string(symbol), folded.dim, folded.value});
  const Entry e{EntryKind::Unit, units_.size() - 1};
  entries_.push_back(e);
  by_symbol_.emplace(symbol, e);
  return units_.back();
}

const UnitDef& UnitSystem::define_derived_unit(std::string_view symbol,
                                               std::string_view expr) {
  claim(symbol);
  const lang::ParsedExpr parsed = lang::parse_expression(std::string(expr));
  return define_derived_unit(symbol, lang::fold(*this, *parsed.expr));
}

const ConstantDef& UnitSystem::define_constant(std::string_view symbol,
                                               const Quantity& folded) {
  claim(symbol);
  if (!std::isfinite(folded.value)) {
    throw Error(ErrorCode::InvalidFactor,
                "constant '" + std::string(symbol) + "' is not finite");
  }
  require_known_axes(folded.dim, symbol);
  constants_.push_back(ConstantDef{std::string(symbol), folded});
  const Entry e{EntryKind::Constant, constants_.size() - 1};
  entries_.push_back(e);
  by_symbol_.emplace(symbol, e);
  return constants_.back();
}

const ConstantDef& UnitSystem::define_constant(std::string_view symbol,
                                               std::string_view expr) {
  claim(symbol);
  const lang::ParsedExpr parsed = lang::parse_expression(std::string(expr));
  return define_constant(symbol, lang::fold(*this, *parsed.expr));
}

std::optional<std::size_t> UnitSystem::find_axis(std::string_view name) const {
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    if (axes_[i] == name) return i;
  }
  return std::nullopt;
}

const UnitDef* UnitSystem::find_unit(std::string_view symbol) const {
  const auto it = by_symbol_.find(std::string(symbol));
  if (it == by_symbol_.end() || it->second.kind != EntryKind::Unit) {
    return nullptr;
  }
  return &units_[it->second.index];
}

const ConstantDef* UnitSystem::find_constant(std::string_view symbol) const {
  const auto it = by_symbol_.find(std::string(symbol));
  if (it == by_symbol_.end() || it->second.kind != EntryKind::Constant) {
    return nullptr;
  }
  return &constants_[it->second.index];
}

bool UnitSystem::defines(std::string_view symbol) const {
  return by_symbol_.contains(std::string(symbol));
}

Quantity UnitSystem::as_quantity(const UnitDef& u) const {
  return Quantity{u.factor, default_prec_, u.dim};
}

std::string UnitSystem::axis_symbol(std::size_t axis) const {
  const DimVector unit_vec = DimVector::axis(axis_count(), axis);
  // the coherent unit of the axis, i.e. the one the stored numbers are in
  for (const UnitDef& u : units_) {
    if (u.factor == 1.0 && u.dim == unit_vec) return u.symbol;
  }
  if (axis < axis_base_.size() && axis_base_[axis]) {
    return units_[*axis_base_[axis]].symbol;
  }
  if (axis < axes_.size()) return axes_[axis];
  return "axis" + std::to_string(axis);
}

std::string UnitSystem::render(const DimVector& dim) const {
  std::string out;
  for (std::size_t i = 0; i < dim.size(); ++i) {
    if (dim[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += axis_symbol(i) + "^" + std::to_string(dim[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace dimcheck
