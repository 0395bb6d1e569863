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

#include <vector>

#include "dqcc/circuit.hpp"

namespace dqcc {

// Dense statevector over n qubits; qubit 0 is the most significant bit of
// the basis index.
struct StateVector {
  int n = 0;
  std::vector<cplx> amp;

  explicit StateVector(int nq = 0);
  static StateVector basis(int nq, std::size_t index);

  void apply(const Gate& g);
  double norm() const;
  // Probability that qubit q measures 1.
  double prob_one(int q) const;
  // Projects qubit q onto outcome and renormalizes; returns branch weight.
  double collapse(int q, int outcome);
};

double max_abs_diff(const StateVector& a, const StateVector& b);

// Runs the circuit on |0...0> or on a caller-provided initial state.
StateVector simulate(const Circuit& c);
StateVector simulate(const Circuit& c, StateVector initial);

// Unitary equivalence up to global phase; both circuits must have the same
// width, at most 10 qubits.
bool equivalent(const Circuit& a, const Circuit& b, double tol = 1e-8);

}  // namespace dqcc
