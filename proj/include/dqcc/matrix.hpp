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

#include <complex>
#include <cstddef>
#include <vector>

namespace dqcc {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major. Sized for gate matrices and for
// unitaries of circuits small enough to verify (up to 2^12).
struct ComplexMatrix {
  std::size_t dim = 0;
  std::vector<cplx> a;

  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t d) : dim(d), a(d * d, cplx(0.0, 0.0)) {}

  cplx& operator()(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return a[r * dim + c]; }

  static ComplexMatrix identity(std::size_t d);
  static ComplexMatrix zero(std::size_t d) { return ComplexMatrix(d); }

  ComplexMatrix dagger() const;
  bool is_unitary(double tol = 1e-10) const;
};

ComplexMatrix mul(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix kron(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
double max_abs_diff(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

// True when every entry off the (anti)diagonal has modulus below tol.
bool is_diagonal(const ComplexMatrix& m, double tol = 1e-10);
bool is_anti_diagonal(const ComplexMatrix& m, double tol = 1e-10);

// Multiplies every entry so that the first entry of column 0 with modulus
// >= 1/(2*sqrt(dim)) becomes real positive. Unitary columns always contain
// such an entry, which makes the canonical form stable under perturbation.
ComplexMatrix canonical_phase(const ComplexMatrix& m);

inline ComplexMatrix make2(cplx a00, cplx a01, cplx a10, cplx a11) {
  ComplexMatrix m(2);
  m(0, 0) = a00;
  m(0, 1) = a01;
  m(1, 0) = a10;
  m(1, 1) = a11;
  return m;
}

}  // namespace dqcc
