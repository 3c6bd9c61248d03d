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

#include <string>
#include <vector>

#include "dimcheck/unit_system.hpp"

namespace dimcheck {

/// 17 significant digits, %g style. Round-trips every double.
std::string format_number(double v);

/// One row per unit and constant in definition order:
/// `symbol  dim  factor[  packed-code]`. The code column is present only
/// for the packed encoding.
std::vector<std::string> dump_units(const UnitSystem& units);

}  // namespace dimcheck
