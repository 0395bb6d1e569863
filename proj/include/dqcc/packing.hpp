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
#include "dqcc/rng.hpp"

namespace dqcc {

// A run of consecutive gates that all hang off one control qubit, the root.
// Members are controlled gates with control == root, (anti)diagonal
// single-qubit gates on the root, or arbitrary single-qubit gates on the
// other register qubits. Such a run acts as
//   |0><0| D (x) lambda0 A_1 (x) ... + |1><1| D (x) lambda1 B_1 (x) ...
// with D in {I, X}, so one shared entanglement round per remote processor
// implements every member at once.
struct GatePacket {
  int root = -1;
  std::vector<int> sub_register;  // sorted, contains root
  std::vector<Gate> members;      // in program order
};

// A packet index or a loose gate index, in program order.
struct ProgramItem {
  bool is_packet = false;
  int index = 0;
};

struct PackingResult {
  int n = 0;
  std::vector<GatePacket> packets;
  std::vector<Gate> loose;
  std::vector<ProgramItem> order;
};

// Groups gates without reordering them: one packet is open at a time, and a
// controlled gate extends it only when it shares the open root and every
// single-qubit gate seen since the last member already fits the register.
PackingResult baseline_pack(const Circuit& c);

struct GreedyOptions {
  // Hoisting a gate backward to an earlier packet checks commutation against
  // at most this many intervening gates.
  int window = 32;
  int max_merge_passes = 10;
};

// Keeps one packet open per root and commutes gates backward to reach them.
// A controlled gate with a diagonal block may join a packet rooted at its
// target, factored into a control-side phase and a controlled phase. A
// final pass merges same-root packets whose separation commutes away.
PackingResult greedy_pack(const Circuit& c, const GreedyOptions& opts = {});

// Checks the structural invariants above; throws InvariantError.
void validate_packing(const PackingResult& r);

// The reordered program: packets and loose gates flattened in order.
Circuit replay(const PackingResult& r);

// Product of the members over the sub-register (sorted order, first qubit
// is the most significant factor). Register must hold at most 11 qubits.
ComplexMatrix packet_unitary(const GatePacket& p);

// The two-branch form of a packet. Slot i describes sub_register with the
// root removed, in sorted order.
struct PacketBlocks {
  bool flip = false;  // the shared root factor D is X rather than I
  cplx lambda0{1.0, 0.0};
  cplx lambda1{1.0, 0.0};
  std::vector<ComplexMatrix> a;  // control-0 branch, one 2x2 per slot
  std::vector<ComplexMatrix> b;  // control-1 branch
};

PacketBlocks packet_blocks(const GatePacket& p);

// Dense reconstruction from the block form; same size limits as
// packet_unitary.
ComplexMatrix blocks_unitary(const GatePacket& p, const PacketBlocks& bl);

// Compares the member product against the block form on root basis states
// and random per-slot vectors, without building the dense unitary, so it
// scales to wide registers. Returns the largest residual seen.
double blocks_fit_error(const GatePacket& p, const PacketBlocks& bl,
                        SplitMix64& rng, int trials = 4);

}  // namespace dqcc
