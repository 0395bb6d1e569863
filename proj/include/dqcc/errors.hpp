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

namespace dqcc {

// No feasible assignment exists, e.g. k * capacity < n.
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed; indicates a compiler bug or a
// hand-constructed structure that violates the documented invariants.
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The request exceeds what dense verification can handle.
struct TooLargeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dqcc
