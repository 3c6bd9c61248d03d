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

// Two evaluators over a checked program.
//
// eval_checked carries full Quantity values and re-derives every dimension
// through the unit system's algebra; each dimension operation bumps
// EvalStats::dim_ops. eval_fast runs on bare doubles: units are their
// folded factors, variables are slots, and no dimension is ever touched, so
// its counter stays at zero. Both go through the same arith:: kernels and
// produce bit-identical output.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dimcheck/lang/checker.hpp"

namespace dimcheck::lang {

struct OutputRecord {
  std::string label;
  double value = 0.0;
  std::string unit_text;
  bool dimensionless = false;
};

struct EvalStats {
  std::uint64_t dim_ops = 0;
};

enum class ExecMode : std::uint8_t { Checked, Fast };

/// Both throw Error(DomainError) with a source position on a runtime
/// domain failure. The program must have checked clean.
std::vector<OutputRecord> eval_checked(const TypedProgram& tp,
                                       EvalStats* stats = nullptr);
std::vector<OutputRecord> eval_fast(const TypedProgram& tp,
                                    EvalStats* stats = nullptr);

std::vector<OutputRecord> evaluate(const TypedProgram& tp, ExecMode mode,
                                   EvalStats* stats = nullptr);

/// `<label> = <value> <unit>`, value at 17 significant digits; the unit is
/// omitted for dimensionless prints.
std::string format_output(const OutputRecord& r);

struct BenchReport {
  std::uint64_t iterations = 0;
  double checked_seconds = 0.0;
  double fast_seconds = 0.0;
  std::uint64_t checked_dim_ops = 0;
  std::uint64_t fast_dim_ops = 0;
  bool outputs_equal = false;
};

/// Evaluates the program `iterations` times in each mode.
BenchReport bench(const TypedProgram& tp, std::uint64_t iterations);

}  // namespace dimcheck::lang
