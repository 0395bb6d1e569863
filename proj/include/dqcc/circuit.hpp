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

#include <string>
#include <vector>

#include "dqcc/gate.hpp"

namespace dqcc {

struct Circuit {
  int n = 0;
  std::vector<Gate> gates;
  std::string name;

  void push(Gate g);
  void validate() const;  // qubit bounds and unitarity
};

// Full unitary as the ordered product of embedded gate matrices. Qubit 0 is
// the most significant tensor factor. Requires n <= 12.
ComplexMatrix circuit_unitary(const Circuit& c);

}  // namespace dqcc
