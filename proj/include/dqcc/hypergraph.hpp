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

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "dqcc/packing.hpp"

namespace dqcc {

struct Hyperedge {
  std::vector<int> pins;  // sorted qubits
  long weight = 1;
};

struct Hypergraph {
  int n = 0;
  std::vector<Hyperedge> edges;
};

// One edge per distinct packet sub-register; repeats fold into the weight.
// Loose gates span one qubit and never contribute.
Hypergraph build_hypergraph(const PackingResult& r);

// Sum over edges of weight * (parts spanned - 1).
long connectivity_cost(const Hypergraph& h, const std::vector<int>& part);

struct PartitionOptions {
  int k = 2;
  // Maximum vertices per part; -1 means floor(n / k) + 1.
  int capacity = -1;
  int restarts = 16;
  int passes = 8;
  std::uint64_t seed = 1;
};

// Balanced k-way partition minimizing connectivity: randomized region
// growth seeds each restart, refined by pass-based single-vertex moves with
// the best intermediate state kept. Restarts run in parallel when
// DQC_THREADS allows; the result is the same for any thread count. Throws
// InfeasibleError when k * capacity < n.
std::vector<int> partition(const Hypergraph& h, const PartitionOptions& opts);

// Text dump: "|E| |V| 1" then one line per edge (weight first, 1-based
// pins), the common external format for hypergraph partitioners.
void write_hmetis(const Hypergraph& h, std::ostream& out);

}  // namespace dqcc
