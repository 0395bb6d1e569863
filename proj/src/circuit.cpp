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

#include "dqcc/circuit.hpp"

#include <stdexcept>

#include "dqcc/simulate.hpp"

namespace dqcc {

void Circuit::push(Gate g) { gates.push_back(std::move(g)); }

void Circuit::validate() const {
  for (const Gate& g : gates) {
    for (int q : g.support())
      if (q < 0 || q >= n) throw std::out_of_range("gate qubit out of range");
    if (!g.u.is_unitary(1e-10)) throw std::invalid_argument("gate matrix is not unitary");
    if (g.kind == GateKind::Controlled && g.control == g.target)
      throw std::invalid_argument("control and target coincide");
  }
}

ComplexMatrix circuit_unitary(const Circuit& c) {
  if (c.n > 12) throw std::invalid_argument("circuit too large for dense unitary");
  const std::size_t dim = std::size_t{1} << c.n;
  // Columns are evolved as statevectors; cheaper than repeated dense products.
  std::vector<StateVector> cols;
  cols.reserve(dim);
  for (std::size_t j = 0; j < dim; ++j) cols.push_back(StateVector::basis(c.n, j));
  for (const Gate& g : c.gates)
    for (auto& col : cols) col.apply(g);
  ComplexMatrix out(dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i) out(i, j) = cols[j].amp[i];
  return out;
}

}  // namespace dqcc
