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

#include "dqcc/gate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dqcc {

std::vector<int> Gate::support() const {
  if (kind == GateKind::Single) return {target};
  return {control, target};
}

ComplexMatrix Gate::matrix() const {
  if (kind == GateKind::Single) return u;
  ComplexMatrix m = ComplexMatrix::identity(4);
  m(2, 2) = u(0, 0);
  m(2, 3) = u(0, 1);
  m(3, 2) = u(1, 0);
  m(3, 3) = u(1, 1);
  return m;
}

GateClass classify(const Gate& g, double tol) {
  if (!g.u.is_unitary(tol)) throw std::invalid_argument("gate matrix is not unitary");
  GateClass cls;
  if (g.kind == GateKind::Single) {
    cls.diagonal = is_diagonal(g.u, tol);
    cls.anti_diagonal = is_anti_diagonal(g.u, tol);
    return cls;
  }
  cls.diagonal = is_diagonal(g.u, tol);
  cls.anti_diagonal = false;
  // Swap the roles of control and target and compare the 4x4 matrices.
  const ComplexMatrix cu = g.matrix();
  ComplexMatrix swapped(4);
  auto flip = [](std::size_t i) { return ((i & 1u) << 1) | (i >> 1); };
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) swapped(flip(r), flip(c)) = cu(r, c);
  cls.control_symmetric = max_abs_diff(cu, swapped) <= tol;
  return cls;
}

ComplexMatrix embed(const Gate& g, const std::vector<int>& support) {
  if (support.size() > 3) throw std::invalid_argument("embed supports at most 3 qubits");
  const auto slot = [&](int q) {
    const auto it = std::find(support.begin(), support.end(), q);
    if (it == support.end()) throw std::invalid_argument("gate qubit missing from support");
    return static_cast<int>(it - support.begin());
  };
  const int n = static_cast<int>(support.size());
  const std::size_t dim = std::size_t{1} << n;
  // support[0] is the most significant bit of a basis index.
  const auto bit_of = [&](std::size_t state, int s) {
    return static_cast<int>((state >> (n - 1 - s)) & 1u);
  };
  ComplexMatrix out(dim);
  const int ts = slot(g.target);
  const int cs = g.kind == GateKind::Controlled ? slot(g.control) : -1;
  if (cs == ts && g.kind == GateKind::Controlled)
    throw std::invalid_argument("control and target coincide");
  for (std::size_t col = 0; col < dim; ++col) {
    if (cs >= 0 && bit_of(col, cs) == 0) {
      out(col, col) = 1.0;
      continue;
    }
    const int tb = bit_of(col, ts);
    const std::size_t mask = std::size_t{1} << (n - 1 - ts);
    const std::size_t col0 = col & ~mask;
    const std::size_t col1 = col | mask;
    out(col0, col) = g.u(0, tb);
    out(col1, col) = g.u(1, tb);
  }
  return out;
}

bool commutes(const Gate& lhs, const Gate& rhs, double tol) {
  std::vector<int> s1 = lhs.support(), s2 = rhs.support();
  std::vector<int> shared;
  for (int q : s1)
    if (std::find(s2.begin(), s2.end(), q) != s2.end()) shared.push_back(q);
  if (shared.empty()) return true;
  std::vector<int> all = s1;
  for (int q : s2)
    if (std::find(all.begin(), all.end(), q) == all.end()) all.push_back(q);
  std::sort(all.begin(), all.end());
  const ComplexMatrix a = embed(lhs, all);
  const ComplexMatrix b = embed(rhs, all);
  return max_abs_diff(mul(a, b), mul(b, a)) <= tol;
}

Gate single(int q, const ComplexMatrix& u, std::string name, std::vector<double> params) {
  Gate g;
  g.kind = GateKind::Single;
  g.target = q;
  g.u = u;
  g.name = std::move(name);
  g.params = std::move(params);
  return g;
}

Gate controlled(int c, int t, const ComplexMatrix& u, std::string name,
                std::vector<double> params) {
  if (c == t) throw std::invalid_argument("control and target coincide");
  Gate g;
  g.kind = GateKind::Controlled;
  g.control = c;
  g.target = t;
  g.u = u;
  g.name = std::move(name);
  g.params = std::move(params);
  return g;
}

ComplexMatrix mat_i() { return ComplexMatrix::identity(2); }
ComplexMatrix mat_x() { return make2(0, 1, 1, 0); }
ComplexMatrix mat_y() { return make2(0, cplx(0, -1), cplx(0, 1), 0); }
ComplexMatrix mat_z() { return make2(1, 0, 0, -1); }
ComplexMatrix mat_h() {
  const double s = 1.0 / std::sqrt(2.0);
  return make2(s, s, s, -s);
}
ComplexMatrix mat_s() { return make2(1, 0, 0, cplx(0, 1)); }
ComplexMatrix mat_sdg() { return make2(1, 0, 0, cplx(0, -1)); }
ComplexMatrix mat_t() { return mat_phase(M_PI / 4); }
ComplexMatrix mat_tdg() { return mat_phase(-M_PI / 4); }
ComplexMatrix mat_sx() {
  return make2(cplx(0.5, 0.5), cplx(0.5, -0.5), cplx(0.5, -0.5), cplx(0.5, 0.5));
}
ComplexMatrix mat_sxdg() {
  return make2(cplx(0.5, -0.5), cplx(0.5, 0.5), cplx(0.5, 0.5), cplx(0.5, -0.5));
}
ComplexMatrix mat_rx(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return make2(c, cplx(0, -s), cplx(0, -s), c);
}
ComplexMatrix mat_ry(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return make2(c, -s, s, c);
}
ComplexMatrix mat_rz(double theta) {
  return make2(std::exp(cplx(0, -theta / 2)), 0, 0, std::exp(cplx(0, theta / 2)));
}
ComplexMatrix mat_phase(double lambda) { return make2(1, 0, 0, std::exp(cplx(0, lambda))); }
ComplexMatrix mat_u3(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return make2(c, -std::exp(cplx(0, lambda)) * s, std::exp(cplx(0, phi)) * s,
               std::exp(cplx(0, phi + lambda)) * c);
}

}  // namespace dqcc
