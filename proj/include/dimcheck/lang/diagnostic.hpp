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

#include "dimcheck/error.hpp"

namespace dimcheck::lang {

struct Diagnostic {
  std::string file;
  SourcePos pos;
  ErrorCode code = ErrorCode::ParseError;
  std::string message;
};

using Diagnostics = std::vector<Diagnostic>;

/// `<file>:<line>:<col>: error[<code>]: <message>`
std::string format(const Diagnostic& d);

}  // namespace dimcheck::lang
