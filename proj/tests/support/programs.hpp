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

// Fixture programs shared by the unit and acceptance suites.

#pragma once

#include <string>

namespace dimcheck::testing {

// The free-fall program: time for a slice of bread to fall from a 1 m table.
inline const std::string kListingF =
    "dim length; dim mass; dim time;\n"
    "unit m = base(length, 1.0);\n"
    "unit g = base(mass, 1e-3);\n"
    "unit s = base(time, 1.0);\n"
    "let height : m       = 1*m;\n"
    "let g0     : m/s^2   = 9.81*m/s^2;\n"
    "let t      : s       = sqrt(2*height/g0);\n"
    "print t in s;\n";

// Derived units, constants and a mixed-unit sum.
inline const std::string kDerivedCorpus =
    "dim length; dim mass; dim time;\n"       // 1
    "unit m = base(length, 1.0);\n"           // 2
    "unit g = base(mass, 1e-3);\n"            // 3
    "unit s = base(time, 1.0);\n"             // 4
    "unit cm = m/100;\n"                      // 5
    "unit kg = 1000*g;\n"                     // 6
    "unit J = kg*m*m/s/s;\n"                  // 7
    "const c = 2.99792458e8 * m / s;\n"       // 8
    "print (1*m + 75*cm) in cm;\n"            // 9
    "print c in m/s;\n"                       // 10
    "let E : J = 2*kg * c^2;\n"               // 11
    "print E in J;\n";                        // 12

// Base dimensions and units most generated programs start from.
inline const std::string kPrelude =
    "dim length; dim mass; dim time;\n"
    "unit m = base(length, 1.0);\n"
    "unit g = base(mass, 1e-3);\n"
    "unit s = base(time, 1.0);\n"
    "unit kg = 1000*g;\n"
    "unit cm = m/100;\n"
    "unit km = 1000*m;\n"
    "unit hour = 3600*s;\n";

}  // namespace dimcheck::testing
