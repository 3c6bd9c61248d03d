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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dimcheck {

enum class ErrorCode : std::uint8_t {
  ParseError,
  UnknownUnit,
  UnknownAxis,
  Redefinition,
  DimensionMismatch,
  NonIntegerExponent,
  CapacityOverflow,
  InvalidFactor,
  DomainError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// 1-based line/column into UDL source.
struct SourcePos {
  std::uint32_t line = 1;
  std::uint32_t col = 1;

  friend auto operator<=>(const SourcePos&, const SourcePos&) = default;
};

/// Every failure raised by the library carries one of the ErrorCode values.
/// Errors raised while checking or evaluating UDL additionally carry the
/// source position of the offending node.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<SourcePos> pos = std::nullopt)
      : std::runtime_error(message), code_(code), pos_(pos) {}

  ErrorCode code() const noexcept { return code_; }
  const std::optional<SourcePos>& pos() const noexcept { return pos_; }

  void set_pos(SourcePos pos) noexcept {
    if (!pos_) pos_ = pos;
  }

 private:
  ErrorCode code_;
  std::optional<SourcePos> pos_;
};

}  // namespace dimcheck
