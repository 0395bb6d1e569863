// Copyright 2026 The dqcc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dqcc/circuit.hpp"

namespace dqcc {

struct FrontendOptions {
  // Phase-family rotations (rz, p, u1 and their controlled forms) whose
  // angle folds to less than this are dropped after macro expansion.
  double truncate_angle = 1e-10;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line_no);
  int line;
};

struct FrontendResult {
  Circuit circuit;
  std::vector<std::string> warnings;
};

// Reads OpenQASM 2.0. The standard library gates are built in; user gate
// definitions are inlined. Multiple quantum registers are flattened in
// declaration order. measure and barrier are discarded with a warning;
// classical control is rejected.
FrontendResult parse_qasm(const std::string& text,
                          const FrontendOptions& opts = {});
FrontendResult parse_qasm_file(const std::string& path,
                               const FrontendOptions& opts = {});

}  // namespace dqcc
