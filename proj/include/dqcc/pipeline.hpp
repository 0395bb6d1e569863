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
#include <string>
#include <vector>

#include "dqcc/circuit.hpp"
#include "dqcc/hypergraph.hpp"
#include "dqcc/packing.hpp"

namespace dqcc {

struct CompileOptions {
  int k = 2;
  int capacity = -1;  // -1: floor(n / k) + 1
  std::uint64_t seed = 0;
  GreedyOptions greedy;
  int restarts = 16;
  int passes = 8;
  int comm_per_qpu = 2;
};

// One method's full output: the grouping, the placement, and the bill.
struct CompiledMethod {
  std::string method;  // "greedy" or "baseline"
  PackingResult packing;
  std::vector<int> partition;
  long cost = 0;  // EPR pairs the emitted program will consume
  long hg_edges = 0;
  long hg_weight = 0;
  double wall_ms = 0.0;
};

// Groups with the chosen method, folds the grouping into a weighted
// hypergraph, partitions it, and cross-checks the connectivity objective
// against the per-packet cost of the resulting placement.
CompiledMethod compile_with(const Circuit& c, const std::string& method,
                            const CompileOptions& opt);

struct CompileReport {
  std::string circuit;
  int n = 0;
  int k = 0;
  int capacity = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;
  std::vector<CompiledMethod> methods;
};

CompileReport compile_circuit(
    const Circuit& c, const CompileOptions& opt,
    const std::vector<std::string>& methods = {"baseline", "greedy"});

void write_report_json(const CompileReport& r, std::ostream& out);

}  // namespace dqcc
