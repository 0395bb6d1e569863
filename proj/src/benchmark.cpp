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

#include "dqcc/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "dqcc/pipeline.hpp"
#include "dqcc/qasm.hpp"
#include "dqcc/rng.hpp"

namespace dqcc {

Circuit random_circuit(const RandomCircuitConfig& cfg) {
  if (cfg.n < 2) throw std::invalid_argument("random_circuit needs n >= 2");
  if (cfg.p_single < 0.0 || cfg.p_single > 1.0)
    throw std::invalid_argument("p_single must lie in [0, 1]");
  const int stop = cfg.stop_at < 0 ? cfg.n * cfg.n : cfg.stop_at;
  if (stop < 1) throw std::invalid_argument("stop_at must be at least 1");

  SplitMix64 rng(cfg.seed);
  Circuit c;
  c.n = cfg.n;
  c.name = "random";
  const auto angle = [&rng] { return rng.uniform() * 2.0 * std::numbers::pi; };
  int two = 0;
  while (two < stop) {
    const int a = static_cast<int>(rng.uniform_int(cfg.n));
    int b = static_cast<int>(rng.uniform_int(cfg.n - 1));
    if (b >= a) ++b;
    if (rng.uniform() < cfg.p_single) {
      for (int q : {a, b}) {
        switch (rng.uniform_int(3)) {
          case 0: c.push(single(q, mat_h(), "h")); break;
          case 1: c.push(single(q, mat_x(), "x")); break;
          default: {
            const double t = angle();
            c.push(single(q, mat_rz(t), "rz", {t}));
          }
        }
      }
    } else {
      if (rng.uniform_int(2) == 0) {
        c.push(controlled(a, b, mat_x(), "cx"));
      } else {
        const double t = angle();
        c.push(controlled(a, b, mat_rz(t), "crz", {t}));
      }
      ++two;
    }
  }
  return c;
}

namespace {

void compile_both(const Circuit& c, const CompileOptions& opt,
                  std::uint64_t record_seed, ExperimentResult& out) {
  for (const char* method : {"baseline", "greedy"}) {
    CompiledMethod m = compile_with(c, method, opt);
    out.records.push_back(
        {c.name, c.n, opt.k, method, m.cost, record_seed, m.wall_ms});
  }
}

}  // namespace

ExperimentResult run_experiment(const std::vector<int>& n_list,
                                const std::vector<int>& k_list,
                                int repetitions, std::uint64_t seed,
                                double p_single) {
  ExperimentResult out;
  const SplitMix64 base(seed);
  std::uint64_t instance = 0;
  for (int n : n_list) {
    for (int k : k_list) {
      for (int rep = 0; rep < repetitions; ++rep, ++instance) {
        SplitMix64 stream = base.derive(instance);
        RandomCircuitConfig cfg;
        cfg.n = n;
        cfg.p_single = p_single;
        cfg.seed = stream.next();
        Circuit c = random_circuit(cfg);
        c.name = "random_n" + std::to_string(n) + "_r" + std::to_string(rep);
        CompileOptions opt;
        opt.k = k;
        opt.seed = stream.next();
        compile_both(c, opt, cfg.seed, out);
      }
    }
  }
  return out;
}

ExperimentResult run_qasm_files(const std::vector<std::string>& files, int k,
                                std::uint64_t seed,
                                std::vector<std::string>* errors) {
  ExperimentResult out;
  const SplitMix64 base(seed);
  for (std::size_t i = 0; i < files.size(); ++i) {
    FrontendResult fr;
    try {
      fr = parse_qasm_file(files[i]);
    } catch (const std::exception& e) {
      if (errors) errors->push_back(files[i] + ": " + e.what());
      continue;
    }
    SplitMix64 stream = base.derive(i);
    CompileOptions opt;
    opt.k = k;
    opt.seed = stream.next();
    compile_both(fr.circuit, opt, opt.seed, out);
  }
  return out;
}

namespace {

struct PairKey {
  std::string circuit;
  int n, k;
  std::uint64_t seed;
  auto operator<=>(const PairKey&) const = default;
};

std::map<PairKey, std::pair<long, long>> paired(const ExperimentResult& r) {
  std::map<PairKey, std::pair<long, long>> pairs;  // baseline, greedy
  for (const ExperimentRecord& rec : r.records) {
    auto& p = pairs[{rec.circuit, rec.n, rec.k, rec.seed}];
    (rec.method == "baseline" ? p.first : p.second) = rec.cost;
  }
  return pairs;
}

}  // namespace

std::vector<ReductionSummary> summarize(const ExperimentResult& r) {
  std::map<std::pair<int, int>, std::vector<double>> cells;
  for (const auto& [key, costs] : paired(r)) {
    if (costs.first <= 0) continue;
    cells[{key.n, key.k}].push_back(
        100.0 * static_cast<double>(costs.first - costs.second) /
        static_cast<double>(costs.first));
  }
  std::vector<ReductionSummary> out;
  for (const auto& [nk, vals] : cells) {
    ReductionSummary s;
    s.n = nk.first;
    s.k = nk.second;
    s.pairs = static_cast<int>(vals.size());
    double sum = 0;
    for (double v : vals) sum += v;
    s.mean = sum / s.pairs;
    double ss = 0;
    for (double v : vals) ss += (v - s.mean) * (v - s.mean);
    s.stddev = s.pairs > 1 ? std::sqrt(ss / (s.pairs - 1)) : 0.0;
    out.push_back(s);
  }
  return out;
}

double mean_reduction(const ExperimentResult& r, int k) {
  double sum = 0;
  int count = 0;
  for (const auto& [key, costs] : paired(r)) {
    if (key.k != k || costs.first <= 0) continue;
    sum += 100.0 * static_cast<double>(costs.first - costs.second) /
           static_cast<double>(costs.first);
    ++count;
  }
  return count ? sum / count : 0.0;
}

void write_csv(const ExperimentResult& r, std::ostream& out) {
  out << "circuit,n,k,method,cost,seed,wall_ms\n";
  char wall[32];
  for (const ExperimentRecord& rec : r.records) {
    std::snprintf(wall, sizeof wall, "%.3f", rec.wall_ms);
    out << rec.circuit << ',' << rec.n << ',' << rec.k << ',' << rec.method
        << ',' << rec.cost << ',' << rec.seed << ',' << wall << '\n';
  }
}

}  // namespace dqcc
