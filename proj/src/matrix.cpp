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

#include "dqcc/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace dqcc {

ComplexMatrix ComplexMatrix::identity(std::size_t d) {
  ComplexMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

bool ComplexMatrix::is_unitary(double tol) const {
  return max_abs_diff(mul(*this, dagger()), identity(dim)) <= tol;
}

ComplexMatrix mul(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.dim != rhs.dim) throw std::invalid_argument("matrix dimension mismatch");
  const std::size_t d = lhs.dim;
  ComplexMatrix out(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t k = 0; k < d; ++k) {
      const cplx v = lhs(r, k);
      if (v == cplx(0.0, 0.0)) continue;
      for (std::size_t c = 0; c < d; ++c) out(r, c) += v * rhs(k, c);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  const std::size_t dl = lhs.dim, dr = rhs.dim;
  ComplexMatrix out(dl * dr);
  for (std::size_t r1 = 0; r1 < dl; ++r1)
    for (std::size_t c1 = 0; c1 < dl; ++c1) {
      const cplx v = lhs(r1, c1);
      if (v == cplx(0.0, 0.0)) continue;
      for (std::size_t r2 = 0; r2 < dr; ++r2)
        for (std::size_t c2 = 0; c2 < dr; ++c2)
          out(r1 * dr + r2, c1 * dr + c2) = v * rhs(r2, c2);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.dim != rhs.dim) throw std::invalid_argument("matrix dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < lhs.a.size(); ++i)
    worst = std::max(worst, std::abs(lhs.a[i] - rhs.a[i]));
  return worst;
}

bool is_diagonal(const ComplexMatrix& m, double tol) {
  for (std::size_t r = 0; r < m.dim; ++r)
    for (std::size_t c = 0; c < m.dim; ++c)
      if (r != c && std::abs(m(r, c)) > tol) return false;
  return true;
}

bool is_anti_diagonal(const ComplexMatrix& m, double tol) {
  for (std::size_t r = 0; r < m.dim; ++r)
    for (std::size_t c = 0; c < m.dim; ++c)
      if (r + c != m.dim - 1 && std::abs(m(r, c)) > tol) return false;
  return true;
}

ComplexMatrix canonical_phase(const ComplexMatrix& m) {
  const double floor = 0.5 / std::sqrt(static_cast<double>(m.dim));
  cplx anchor(0.0, 0.0);
  for (std::size_t r = 0; r < m.dim; ++r) {
    if (std::abs(m(r, 0)) >= floor) {
      anchor = m(r, 0);
      break;
    }
  }
  if (anchor == cplx(0.0, 0.0)) return m;
  const cplx phase = std::conj(anchor) / std::abs(anchor);
  ComplexMatrix out = m;
  for (auto& v : out.a) v *= phase;
  return out;
}

}  // namespace dqcc
