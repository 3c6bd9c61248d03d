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

#include "dimcheck/format.hpp"

#include <cstdio>

namespace dimcheck {

std::string format_number(double v) {
  char buf[40];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::vector<std::string> dump_units(const UnitSystem& units) {
  std::vector<std::string> rows;
  rows.reserve(units.entries().size());
  for (const UnitSystem::Entry& e : units.entries()) {
    std::string symbol;
    DimVector dim;
    double value = 0.0;
    if (e.kind == UnitSystem::EntryKind::Unit) {
      const UnitDef& u = units.unit_at(e.index);
      symbol = u.symbol;
      dim = u.dim;
      value = u.factor;
    } else {
      const ConstantDef& c = units.constant_at(e.index);
      symbol = c.symbol;
      dim = c.value.dim;
      value = c.value.value;
    }
    std::string row =
        symbol + "  " + units.render(dim) + "  " + format_number(value);
    if (const auto code = units.algebra().code_of(dim)) {
      row += "  " + std::to_string(code->code);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace dimcheck
