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

#include "dqcc/simulate.hpp"

#include <cmath>
#include <stdexcept>

namespace dqcc {

StateVector::StateVector(int nq) : n(nq), amp(std::size_t{1} << nq, cplx(0.0, 0.0)) {
  if (!amp.empty()) amp[0] = 1.0;
}

StateVector StateVector::basis(int nq, std::size_t index) {
  StateVector s(nq);
  s.amp[0] = 0.0;
  s.amp[index] = 1.0;
  return s;
}

void StateVector::apply(const Gate& g) {
  const std::size_t dim = amp.size();
  const std::size_t tmask = std::size_t{1} << (n - 1 - g.target);
  const std::size_t cmask =
      g.kind == GateKind::Controlled ? (std::size_t{1} << (n - 1 - g.control)) : 0;
  const cplx u00 = g.u(0, 0), u01 = g.u(0, 1), u10 = g.u(1, 0), u11 = g.u(1, 1);
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & tmask) continue;           // visit each target pair once, at bit=0
    if (cmask && !(i & cmask)) continue;
    const std::size_t j = i | tmask;
    const cplx a0 = amp[i], a1 = amp[j];
    amp[i] = u00 * a0 + u01 * a1;
    amp[j] = u10 * a0 + u11 * a1;
  }
}

double StateVector::norm() const {
  double s = 0.0;
  for (const cplx& v : amp) s += std::norm(v);
  return std::sqrt(s);
}

double StateVector::prob_one(int q) const {
  const std::size_t mask = std::size_t{1} << (n - 1 - q);
  double p = 0.0;
  for (std::size_t i = 0; i < amp.size(); ++i)
    if (i & mask) p += std::norm(amp[i]);
  return p;
}

double StateVector::collapse(int q, int outcome) {
  const std::size_t mask = std::size_t{1} << (n - 1 - q);
  double p = 0.0;
  for (std::size_t i = 0; i < amp.size(); ++i) {
    const bool one = (i & mask) != 0;
    if (one == (outcome != 0))
      p += std::norm(amp[i]);
    else
      amp[i] = 0.0;
  }
  if (p > 0.0) {
    const double inv = 1.0 / std::sqrt(p);
    for (cplx& v : amp) v *= inv;
  }
  return p;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  if (a.n != b.n) throw std::invalid_argument("state width mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.amp.size(); ++i)
    worst = std::max(worst, std::abs(a.amp[i] - b.amp[i]));
  return worst;
}

StateVector simulate(const Circuit& c) { return simulate(c, StateVector(c.n)); }

StateVector simulate(const Circuit& c, StateVector initial) {
  if (initial.n != c.n) throw std::invalid_argument("initial state width mismatch");
  for (const Gate& g : c.gates) initial.apply(g);
  return initial;
}

bool equivalent(const Circuit& a, const Circuit& b, double tol) {
  if (a.n != b.n) return false;
  if (a.n > 10) throw std::invalid_argument("circuit too large for equivalence check");
  const ComplexMatrix ua = canonical_phase(circuit_unitary(a));
  const ComplexMatrix ub = canonical_phase(circuit_unitary(b));
  return max_abs_diff(ua, ub) <= tol;
}

}  // namespace dqcc
