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
//
// End-to-end acceptance checks. Each criterion prints one PASS or FAIL
// line; the process exits with the number of failed criteria. Run from the
// repository root or point DQCC_CORPUS at the benchmark directory.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dqcc/benchmark.hpp"
#include "dqcc/distributed.hpp"
#include "dqcc/hypergraph.hpp"
#include "dqcc/packing.hpp"
#include "dqcc/pipeline.hpp"
#include "dqcc/qasm.hpp"
#include "dqcc/rng.hpp"
#include "dqcc/simulate.hpp"

using namespace dqcc;

namespace {

int g_failed = 0;

void report(int id, const std::string& label, bool ok,
            const std::string& detail) {
  std::printf("%s  criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", id,
              label.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failed;
}

std::string corpus_dir() {
  if (const char* env = std::getenv("DQCC_CORPUS")) return env;
  return "benchmarks/qasm";
}

std::string corpus_file(const std::string& stem) {
  return corpus_dir() + "/" + stem + ".qasm";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string csv_without_wall(const ExperimentResult& r) {
  std::ostringstream os;
  write_csv(r, os);
  std::istringstream in(os.str());
  std::string line, out;
  while (std::getline(in, line)) {
    out += line.substr(0, line.rfind(','));
    out += '\n';
  }
  return out;
}

void criterion_1_table_parity() {
  const auto t0 = std::chrono::steady_clock::now();
  // stem -> {greedy, baseline}
  const std::map<std::string, std::pair<long, long>> expected = {
      {"ghz_n40", {1, 1}},        {"cat_state_n35", {1, 1}},
      {"bv_n70", {1, 1}},         {"ising_n34", {1, 1}},
      {"knn_n41", {1, 1}},        {"wstate_n76", {2, 2}},
      {"swap_test_n25", {12, 18}}, {"swap_test_n41", {20, 30}},
  };
  std::vector<std::string> files;
  for (const auto& [stem, costs] : expected) files.push_back(corpus_file(stem));
  std::vector<std::string> errors;
  ExperimentResult r = run_qasm_files(files, 2, 0, &errors);
  std::map<std::string, std::pair<long, long>> got;
  for (const ExperimentRecord& rec : r.records) {
    if (rec.method == "greedy")
      got[rec.circuit].first = rec.cost;
    else
      got[rec.circuit].second = rec.cost;
  }
  std::string detail;
  bool ok = errors.empty();
  for (const auto& [stem, want] : expected) {
    const auto it = got.find(stem);
    const bool row_ok = it != got.end() && it->second == want;
    if (!row_ok) ok = false;
    if (it != got.end())
      detail += stem + " " + std::to_string(it->second.first) + "/" +
                std::to_string(it->second.second) + " ";
  }
  const double secs = seconds_since(t0);
  if (secs >= 30.0) ok = false;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs", secs);
  report(1, "published two-processor costs, eight circuits", ok,
         detail + buf);
}

void criterion_2_qft() {
  const auto t0 = std::chrono::steady_clock::now();
  CompileOptions opt;
  opt.k = 2;
  FrontendResult f29 = parse_qasm_file(corpus_file("qft_n29"));
  const long b29 = compile_with(f29.circuit, "baseline", opt).cost;
  const long g29 = compile_with(f29.circuit, "greedy", opt).cost;
  FrontendResult f63 = parse_qasm_file(corpus_file("qft_n63"));
  const long g63 = compile_with(f63.circuit, "greedy", opt).cost;
  const double secs = seconds_since(t0);
  const bool ok = b29 == 210 && g29 <= 17 && g63 <= 43 && secs < 120.0;
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "qft29 baseline %ld greedy %ld, qft63 greedy %ld, %.2fs", b29,
                g29, g63, secs);
  report(2, "Fourier-transform costs", ok, buf);
}

void criterion_3_qv() {
  CompileOptions opt;
  opt.k = 2;
  FrontendResult fr = parse_qasm_file(corpus_file("qv_n32"));
  const long b = compile_with(fr.circuit, "baseline", opt).cost;
  const long g = compile_with(fr.circuit, "greedy", opt).cost;
  report(3, "quantum-volume null result", g == b,
         "greedy " + std::to_string(g) + " baseline " + std::to_string(b));
}

ExperimentResult run_default_grid() {
  return run_experiment({8, 16, 24, 32}, {2, 4, 8}, 10, 0);
}

void criterion_4_reduction(const ExperimentResult& grid, double secs) {
  const double r2 = mean_reduction(grid, 2);
  const double r4 = mean_reduction(grid, 4);
  const double r8 = mean_reduction(grid, 8);
  const bool ok = r2 >= 20.0 && r2 <= 40.0 && r4 >= 10.0 && r4 <= 29.0 &&
                  r8 >= 3.0 && r8 <= 20.0 && secs < 600.0;
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "k=2 %.2f%% k=4 %.2f%% k=8 %.2f%%, %.2fs", r2, r4, r8, secs);
  report(4, "random-circuit reduction bands", ok, buf);
}

void criterion_5_equivalence() {
  int failures = 0;
  const SplitMix64 base(505);
  for (int i = 0; i < 500; ++i) {
    SplitMix64 stream = base.derive(i);
    RandomCircuitConfig cfg;
    cfg.n = 2 + i % 7;  // 2..8 data qubits
    cfg.seed = stream.next();
    const Circuit c = random_circuit(cfg);
    if (!equivalent(c, replay(greedy_pack(c)), 1e-8)) ++failures;
  }
  report(5, "reordered programs stay equivalent", failures == 0,
         "500 circuits, " + std::to_string(failures) + " failures");
}

void criterion_6_blocks() {
  const std::vector<std::string> stems = {
      "ghz_n40",   "cat_state_n35", "bv_n70",        "ising_n34",
      "knn_n41",   "wstate_n76",    "swap_test_n25", "swap_test_n41",
      "qft_n29",   "qft_n63",       "qv_n32"};
  long checked = 0;
  long bad = 0;
  SplitMix64 rng(606);
  for (const std::string& stem : stems) {
    FrontendResult fr = parse_qasm_file(corpus_file(stem));
    for (PackingResult r : {baseline_pack(fr.circuit), greedy_pack(fr.circuit)}) {
      for (const GatePacket& p : r.packets) {
        const PacketBlocks bl = packet_blocks(p);
        double err;
        if (p.sub_register.size() <= 10)
          err = max_abs_diff(packet_unitary(p), blocks_unitary(p, bl));
        else
          err = blocks_fit_error(p, bl, rng);
        ++checked;
        if (err >= 1e-9) ++bad;
      }
    }
  }
  report(6, "two-branch decomposition of every corpus packet", bad == 0,
         std::to_string(checked) + " packets, " + std::to_string(bad) +
             " misfits");
}

void criterion_7_emission() {
  int bad_cost = 0;
  int bad_sim = 0;
  const SplitMix64 base(707);
  for (int i = 0; i < 100; ++i) {
    SplitMix64 stream = base.derive(i);
    RandomCircuitConfig cfg;
    cfg.n = 3 + i % 4;  // 3..6 data qubits
    cfg.stop_at = cfg.n + 6;
    cfg.seed = stream.next();
    const Circuit c = random_circuit(cfg);
    const PackingResult r =
        i % 2 ? greedy_pack(c) : baseline_pack(c);
    const int k = 2 + static_cast<int>(stream.uniform_int(3));  // 2..4
    std::vector<int> part(cfg.n);
    for (int& v : part) v = static_cast<int>(stream.uniform_int(k));
    const Allocation a = allocation_from_partition(part, k, 1);
    const DistributedProgram p = emit(r, a);
    if (p.epr_count != distribution_cost(r, a)) ++bad_cost;
    const VerifyOutcome v = verify_distributed(c, p, 2, stream.next(), 1e-8);
    if (!v.ok) ++bad_sim;
  }
  report(7, "pair bill matches the placement formula and the simulator",
         bad_cost == 0 && bad_sim == 0,
         "100 pairs, " + std::to_string(bad_cost) + " bill mismatches, " +
             std::to_string(bad_sim) + " state mismatches");
}

void criterion_8_monotonicity() {
  long violations = 0;
  const SplitMix64 base(808);
  GreedyOptions no_merge;
  no_merge.max_merge_passes = 0;
  for (int i = 0; i < 1000; ++i) {
    SplitMix64 stream = base.derive(i);
    RandomCircuitConfig cfg;
    cfg.n = 4 + i % 7;  // 4..10
    cfg.stop_at = 2 * cfg.n;
    cfg.seed = stream.next();
    const Circuit c = random_circuit(cfg);
    const PackingResult merged = greedy_pack(c);
    const PackingResult unmerged = greedy_pack(c, no_merge);
    for (int t = 0; t < 100; ++t) {
      const int k = 2 + static_cast<int>(stream.uniform_int(3));
      std::vector<int> part(cfg.n);
      for (int& v : part) v = static_cast<int>(stream.uniform_int(k));
      const Allocation a = allocation_from_partition(part, k, 1);
      if (distribution_cost(merged, a) > distribution_cost(unmerged, a))
        ++violations;
    }
  }
  report(8, "packet merging never raises the bill", violations == 0,
         "1000 circuits x 100 placements, " + std::to_string(violations) +
             " violations");
}

long brute_force_cost(const Hypergraph& h, int k, int capacity) {
  const int n = h.n;
  std::vector<int> part(n, 0);
  long best = -1;
  while (true) {
    std::vector<int> fill(k, 0);
    bool feasible = true;
    for (int v : part)
      if (++fill[v] > capacity) feasible = false;
    if (feasible) {
      const long cost = connectivity_cost(h, part);
      if (best < 0 || cost < best) best = cost;
    }
    int pos = n - 1;
    while (pos >= 0 && part[pos] == k - 1) part[pos--] = 0;
    if (pos < 0) break;
    ++part[pos];
  }
  return best;
}

void criterion_9_partitioner() {
  const auto t0 = std::chrono::steady_clock::now();
  int equal = 0;
  int below = 0;
  const SplitMix64 base(909);
  for (int i = 0; i < 100; ++i) {
    SplitMix64 stream = base.derive(i);
    Hypergraph h;
    h.n = 8;
    for (int e = 0; e < 12; ++e) {
      std::set<int> pins;
      const int want = 2 + static_cast<int>(stream.uniform_int(3));
      while (static_cast<int>(pins.size()) < want)
        pins.insert(static_cast<int>(stream.uniform_int(8)));
      Hyperedge edge;
      edge.pins.assign(pins.begin(), pins.end());
      edge.weight = 1 + static_cast<long>(stream.uniform_int(3));
      h.edges.push_back(std::move(edge));
    }
    PartitionOptions po;
    po.k = 2;
    po.seed = stream.next();
    const long got = connectivity_cost(h, partition(h, po));
    const long opt = brute_force_cost(h, 2, 8 / 2 + 1);
    if (got < opt) ++below;
    if (got == opt) ++equal;
  }
  const double secs = seconds_since(t0);
  const bool ok = below == 0 && equal >= 90 && secs < 60.0;
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d/100 optimal, %d below, %.2fs", equal,
                below, secs);
  report(9, "partitioner against exhaustive search", ok, buf);
}

void criterion_10_determinism(const ExperimentResult& grid) {
  // Criterion 1 inputs, run twice.
  std::vector<std::string> files;
  for (const char* stem :
       {"ghz_n40", "cat_state_n35", "bv_n70", "ising_n34", "knn_n41",
        "wstate_n76", "swap_test_n25", "swap_test_n41"})
    files.push_back(corpus_file(stem));
  const std::string qasm_a = csv_without_wall(run_qasm_files(files, 2, 0));
  const std::string qasm_b = csv_without_wall(run_qasm_files(files, 2, 0));

  // Criteria 2 and 3, run twice: costs and partitions must repeat.
  CompileOptions opt;
  opt.k = 2;
  std::ostringstream rep_a, rep_b;
  for (const char* stem : {"qft_n29", "qft_n63", "qv_n32"}) {
    FrontendResult fr = parse_qasm_file(corpus_file(stem));
    for (std::ostringstream* out : {&rep_a, &rep_b}) {
      CompileReport r = compile_circuit(fr.circuit, opt);
      for (CompiledMethod& m : r.methods) m.wall_ms = 0;
      write_report_json(r, *out);
    }
  }

  // Criterion 4 grid against a fresh identical run.
  const std::string grid_a = csv_without_wall(grid);
  const std::string grid_b = csv_without_wall(run_default_grid());

  const bool ok = qasm_a == qasm_b && rep_a.str() == rep_b.str() &&
                  grid_a == grid_b && !qasm_a.empty() && !grid_a.empty();
  report(10, "reruns reproduce every output byte (wall clock excluded)", ok,
         qasm_a == qasm_b ? (grid_a == grid_b ? "corpus, reports, grid"
                                              : "grid differs")
                          : "corpus differs");
}

}  // namespace

int main() {
  std::printf("acceptance run, corpus at %s\n", corpus_dir().c_str());
  criterion_1_table_parity();
  criterion_2_qft();
  criterion_3_qv();
  const auto t0 = std::chrono::steady_clock::now();
  const ExperimentResult grid = run_default_grid();
  criterion_4_reduction(grid, seconds_since(t0));
  criterion_5_equivalence();
  criterion_6_blocks();
  criterion_7_emission();
  criterion_8_monotonicity();
  criterion_9_partitioner();
  criterion_10_determinism(grid);
  if (g_failed == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criteria failed\n", g_failed);
  return g_failed;
}
