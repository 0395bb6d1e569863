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

#include "dqcc/matrix.hpp"

namespace dqcc {

// The compiler's gate set: one-qubit unitaries and singly-controlled
// one-qubit unitaries. Anything wider is decomposed by the frontend.
enum class GateKind { Single, Controlled };

struct Gate {
  GateKind kind = GateKind::Single;
  int control = -1;  // meaningful only for Controlled
  int target = 0;
  ComplexMatrix u;  // 2x2 unitary applied to target
  std::string name;
  std::vector<double> params;

  // Qubits the gate acts on, control first for controlled gates.
  std::vector<int> support() const;
  // 2x2 for Single, 4x4 for Controlled with the control as the more
  // significant qubit.
  ComplexMatrix matrix() const;
};

struct GateClass {
  // For Single: band structure of u. For Controlled: band structure of the
  // full 4x4 (which is diagonal exactly when u is, never anti-diagonal).
  bool diagonal = false;
  bool anti_diagonal = false;
  // Swap-invariance of the 4x4, decided numerically; false for Single.
  bool control_symmetric = false;
};

// Throws std::invalid_argument when u is not unitary within tol.
GateClass classify(const Gate& g, double tol = 1e-10);

// Matrix of g on the ordered qubit list `support` (first entry is the most
// significant tensor factor). support must contain g's qubits and hold at
// most 3 qubits.
ComplexMatrix embed(const Gate& g, const std::vector<int>& support);

// True when the gates commute within tol. Disjoint supports short-circuit;
// otherwise both gates are embedded on the union and compared numerically.
bool commutes(const Gate& lhs, const Gate& rhs, double tol = 1e-10);

Gate single(int q, const ComplexMatrix& u, std::string name = "u",
            std::vector<double> params = {});
Gate controlled(int c, int t, const ComplexMatrix& u, std::string name = "cu",
                std::vector<double> params = {});

// Standard 2x2 blocks.
ComplexMatrix mat_i();
ComplexMatrix mat_x();
ComplexMatrix mat_y();
ComplexMatrix mat_z();
ComplexMatrix mat_h();
ComplexMatrix mat_s();
ComplexMatrix mat_sdg();
ComplexMatrix mat_t();
ComplexMatrix mat_tdg();
ComplexMatrix mat_sx();
ComplexMatrix mat_sxdg();
ComplexMatrix mat_rx(double theta);
ComplexMatrix mat_ry(double theta);
ComplexMatrix mat_rz(double theta);
ComplexMatrix mat_phase(double lambda);                        // diag(1, e^{i lambda})
ComplexMatrix mat_u3(double theta, double phi, double lambda);  // u3 convention

}  // namespace dqcc
