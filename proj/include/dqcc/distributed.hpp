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

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "dqcc/packing.hpp"
#include "dqcc/simulate.hpp"

namespace dqcc {

// Placement of data qubits on processors, plus reserved communication
// qubits. Qubit indices [0, n_data) are data; communication qubit `slot` of
// processor p lives at n_data + p * comm_per_qpu + slot.
struct Allocation {
  int n_data = 0;
  int k = 1;
  int comm_per_qpu = 2;
  std::vector<int> qpu_of;  // size n_data

  int total_qubits() const { return n_data + k * comm_per_qpu; }
  int comm_qubit(int qpu, int slot) const {
    return n_data + qpu * comm_per_qpu + slot;
  }
};

Allocation allocation_from_partition(const std::vector<int>& part, int k,
                                     int comm_per_qpu = 2);

// Entanglement bill of a grouping under an allocation: each packet pays one
// pair per remote processor its register touches.
long distribution_cost(const PackingResult& r, const Allocation& alloc);

struct EvGate {
  Gate g;
};
struct EvEpr {
  int qa = 0, qb = 0;  // both must be fresh |0> communication qubits
};
struct EvMeasure {
  int q = 0;
  int cbit = 0;
};
struct EvCondX {
  int q = 0;
  int cbit = 0;
};
struct EvCondZ {
  int q = 0;
  int cbit = 0;
};
struct EvReset {
  int q = 0;  // release; the qubit must already be |0> on every branch
};
struct EvNote {
  std::string text;
};

using Event =
    std::variant<EvGate, EvEpr, EvMeasure, EvCondX, EvCondZ, EvReset, EvNote>;

struct DistributedProgram {
  Allocation alloc;
  std::vector<Event> events;
  int n_cbits = 0;
  long epr_count = 0;
};

// Lowers the grouped program onto the allocation. Local packets and loose
// gates replay directly. A packet with remote register qubits shares its
// root once per remote processor (entangle, local cx, measure, send), runs
// every controlled block against the shared copies, then measures the
// copies out again, so all members cost |processors touched| - 1 pairs.
DistributedProgram emit(const PackingResult& r, const Allocation& alloc);

std::string render_qasm(const DistributedProgram& p);
void write_json(const DistributedProgram& p, std::ostream& out);

struct SimBranch {
  double weight = 1.0;
  std::vector<int> cbits;  // -1 until measured
  StateVector state;
};

// Tracks every measurement branch, folding branches together as soon as
// corrections make them agree, so width stays small. Initial data state is
// extended with |0> communication qubits. Throws InvariantError when a
// protocol invariant breaks and TooLargeError beyond 12 total qubits.
std::vector<SimBranch> simulate_distributed(const DistributedProgram& p,
                                            const StateVector& initial_data);

struct VerifyOutcome {
  bool ok = true;
  double max_deviation = 0.0;
  int states_checked = 0;
};

// Compares the distributed program against the original circuit on |0...0>
// and `random_states` random product states.
VerifyOutcome verify_distributed(const Circuit& original,
                                 const DistributedProgram& p,
                                 int random_states = 3,
                                 std::uint64_t seed = 7,
                                 double tol = 1e-8);

}  // namespace dqcc
