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

namespace dqcc {

struct RandomCircuitConfig {
  int n = 8;
  double p_single = 0.2;  // chance a round emits one-qubit gates instead
  int stop_at = -1;       // two-qubit gate budget; -1 means n * n
  std::uint64_t seed = 0;
};

// Round by round: draw an ordered pair of distinct qubits, then the branch
// coin. A one-qubit round applies an independent uniform draw from
// {h, x, rz} to each drawn qubit (fresh angle per rz); a two-qubit round
// applies cx or crz with the first qubit as control. Rounds stop once
// stop_at two-qubit gates are in. Deterministic given the seed.
Circuit random_circuit(const RandomCircuitConfig& cfg);

struct ExperimentRecord {
  std::string circuit;
  int n = 0;
  int k = 0;
  std::string method;
  long cost = 0;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
};

struct ExperimentResult {
  std::vector<ExperimentRecord> records;
};

// Mean and spread of 100 * (baseline - greedy) / baseline over the paired
// records of one (n, k) cell. Pairs with baseline cost 0 are skipped.
struct ReductionSummary {
  int n = 0;
  int k = 0;
  int pairs = 0;
  double mean = 0.0;
  double stddev = 0.0;
};

// Grid of random-circuit instances; every instance is compiled with both
// methods under the same partitioner configuration. Fully reproducible:
// instance streams derive from (seed, instance index).
ExperimentResult run_experiment(const std::vector<int>& n_list,
                                const std::vector<int>& k_list,
                                int repetitions, std::uint64_t seed,
                                double p_single = 0.2);

// Compiles each OpenQASM file with both methods. Files that fail to parse
// are reported through `errors` and skipped; the batch continues.
ExperimentResult run_qasm_files(const std::vector<std::string>& files, int k,
                                std::uint64_t seed,
                                std::vector<std::string>* errors = nullptr);

std::vector<ReductionSummary> summarize(const ExperimentResult& r);

// Mean reduction across every pair with the given processor count.
double mean_reduction(const ExperimentResult& r, int k);

// Header `circuit,n,k,method,cost,seed,wall_ms`, one row per record.
void write_csv(const ExperimentResult& r, std::ostream& out);

}  // namespace dqcc
