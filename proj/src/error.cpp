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

#include "dimcheck/error.hpp"

namespace dimcheck {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownUnit: return "UnknownUnit";
    case ErrorCode::UnknownAxis: return "UnknownAxis";
    case ErrorCode::Redefinition: return "Redefinition";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonIntegerExponent: return "NonIntegerExponent";
    case ErrorCode::CapacityOverflow: return "CapacityOverflow";
    case ErrorCode::InvalidFactor: return "InvalidFactor";
    case ErrorCode::DomainError: return "DomainError";
  }
  return "Unknown";
}

}  // namespace dimcheck
