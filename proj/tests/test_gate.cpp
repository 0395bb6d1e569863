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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "dqcc/gate.hpp"
#include "dqcc/rng.hpp"

using namespace dqcc;

namespace {

ComplexMatrix swap4() {
  ComplexMatrix s(4);
  s(0, 0) = 1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 3) = 1.0;
  return s;
}

Gate random_u3(SplitMix64& rng, int q) {
  const double pi = 3.14159265358979323846;
  return single(q, mat_u3(rng.uniform() * pi, rng.uniform() * 2 * pi,
                          rng.uniform() * 2 * pi));
}

}  // namespace

TEST_CASE("controlled matrix puts the control on the high bit") {
  Gate cx = controlled(0, 1, mat_x(), "cx");
  ComplexMatrix m = cx.matrix();
  REQUIRE(m.dim == 4);
  const double expected[4][4] = {
      {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      CHECK(std::abs(m(r, c) - expected[r][c]) < 1e-15);
  CHECK(cx.support() == std::vector<int>{0, 1});
}

TEST_CASE("classification of standard controlled gates") {
  GateClass cz = classify(controlled(0, 1, mat_z(), "cz"));
  CHECK(cz.diagonal);
  CHECK(cz.control_symmetric);

  GateClass cp = classify(controlled(2, 5, mat_phase(0.7), "cp", {0.7}));
  CHECK(cp.diagonal);
  CHECK(cp.control_symmetric);

  GateClass cx = classify(controlled(0, 1, mat_x(), "cx"));
  CHECK_FALSE(cx.diagonal);
  CHECK_FALSE(cx.anti_diagonal);
  CHECK_FALSE(cx.control_symmetric);

  // crz carries a phase on the control-0 branch of the target, so swapping
  // control and target changes the operator.
  GateClass crz = classify(controlled(0, 1, mat_rz(0.9), "crz", {0.9}));
  CHECK(crz.diagonal);
  CHECK_FALSE(crz.control_symmetric);
}

TEST_CASE("control symmetry agrees with explicit swap conjugation") {
  SplitMix64 rng(11);
  const double pi = 3.14159265358979323846;
  for (int trial = 0; trial < 50; ++trial) {
    ComplexMatrix u = mat_u3(rng.uniform() * pi, rng.uniform() * 2 * pi,
                             rng.uniform() * 2 * pi);
    Gate g = controlled(0, 1, u);
    ComplexMatrix m = g.matrix();
    ComplexMatrix swapped = mul(swap4(), mul(m, swap4()));
    bool symmetric = max_abs_diff(swapped, m) < 1e-10;
    CHECK(classify(g).control_symmetric == symmetric);
  }
}

TEST_CASE("single-qubit band structure over a rotation family") {
  for (double theta : {0.0, 0.3, 1.7, 2.9}) {
    GateClass rz = classify(single(3, mat_rz(theta), "rz", {theta}));
    CHECK(rz.diagonal);
    CHECK_FALSE(rz.anti_diagonal);
    // x followed by rz is anti-diagonal for every angle.
    GateClass xrz = classify(single(3, mul(mat_rz(theta), mat_x())));
    CHECK(xrz.anti_diagonal);
    CHECK_FALSE(xrz.diagonal);
  }
  CHECK_THROWS_AS(classify(single(0, make2(1.0, 1.0, 0.0, 1.0))),
                  std::invalid_argument);
}

TEST_CASE("embed reproduces the full permutation of cx on three qubits") {
  Gate cx = controlled(0, 2, mat_x(), "cx");
  ComplexMatrix m = embed(cx, {0, 1, 2});
  REQUIRE(m.dim == 8);
  for (std::size_t col = 0; col < 8; ++col) {
    const std::size_t b0 = (col >> 2) & 1;
    const std::size_t row = b0 ? col ^ 1 : col;  // target is the low bit
    for (std::size_t r = 0; r < 8; ++r)
      CHECK(std::abs(m(r, col) - (r == row ? 1.0 : 0.0)) < 1e-15);
  }
}

TEST_CASE("embed respects the caller's qubit ordering") {
  // Support {2, 0} lists the target first, so the control is the low bit.
  Gate cx = controlled(0, 2, mat_x(), "cx");
  ComplexMatrix m = embed(cx, {2, 0});
  REQUIRE(m.dim == 4);
  for (std::size_t col = 0; col < 4; ++col) {
    const std::size_t c = col & 1;
    const std::size_t row = c ? col ^ 2 : col;
    CHECK(std::abs(m(row, col) - 1.0) < 1e-15);
  }
}

TEST_CASE("commutation of standard pairs") {
  Gate cz01 = controlled(0, 1, mat_z(), "cz");
  Gate cz12 = controlled(1, 2, mat_z(), "cz");
  Gate cx01 = controlled(0, 1, mat_x(), "cx");
  Gate cx12 = controlled(1, 2, mat_x(), "cx");
  Gate cx02 = controlled(0, 2, mat_x(), "cx");
  Gate h3 = single(3, mat_h(), "h");

  CHECK(commutes(cz01, cz12));       // both diagonal
  CHECK_FALSE(commutes(cx01, cx12));  // target of one is control of the other
  CHECK(commutes(cx01, cx02));        // shared control only
  CHECK(commutes(cx01, h3));          // disjoint supports
  CHECK_FALSE(commutes(cx01, cz01));  // z on the target blocks x
}

TEST_CASE("commutation is symmetric on random pairs") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    int qa = static_cast<int>(rng.uniform_int(3));
    int qb = static_cast<int>(rng.uniform_int(3));
    Gate a = random_u3(rng, qa);
    Gate b = qb == qa ? random_u3(rng, qb)
                      : controlled(qb, (qb + 1) % 3, mat_u3(rng.uniform(), 0.4, 1.1));
    CHECK(commutes(a, b) == commutes(b, a));
  }
}

TEST_CASE("standard blocks satisfy their defining identities") {
  CHECK(max_abs_diff(mul(mat_h(), mat_h()), mat_i()) < 1e-15);
  CHECK(max_abs_diff(mul(mat_s(), mat_s()), mat_z()) < 1e-15);
  CHECK(max_abs_diff(mul(mat_t(), mat_t()), mat_s()) < 1e-15);
  CHECK(max_abs_diff(mul(mat_sx(), mat_sx()), mat_x()) < 1e-14);
  CHECK(max_abs_diff(mul(mat_s(), mat_sdg()), mat_i()) < 1e-15);
  CHECK(max_abs_diff(mul(mat_t(), mat_tdg()), mat_i()) < 1e-15);
  CHECK(max_abs_diff(mul(mat_sx(), mat_sxdg()), mat_i()) < 1e-14);
  const double pi = 3.14159265358979323846;
  CHECK(max_abs_diff(mat_u3(pi, 0.0, pi), mat_x()) < 1e-15);
  CHECK(max_abs_diff(mat_u3(pi / 2, 0.0, pi), mat_h()) < 1e-15);
  // rz is the symmetric-phase convention.
  ComplexMatrix rz = mat_rz(0.8);
  CHECK(std::abs(rz(0, 0) - std::polar(1.0, -0.4)) < 1e-15);
  CHECK(std::abs(rz(1, 1) - std::polar(1.0, 0.4)) < 1e-15);
  // phase leaves |0> alone.
  ComplexMatrix p = mat_phase(0.8);
  CHECK(std::abs(p(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(p(1, 1) - std::polar(1.0, 0.8)) < 1e-15);
  CHECK(max_abs_diff(mul(mat_y(), mat_y()), mat_i()) < 1e-15);
}

TEST_CASE("gate constructors reject a degenerate pair") {
  CHECK_THROWS_AS(controlled(2, 2, mat_x()), std::invalid_argument);
}
