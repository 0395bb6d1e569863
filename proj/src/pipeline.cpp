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

#include "dqcc/pipeline.hpp"

#include <chrono>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "dqcc/distributed.hpp"
#include "dqcc/errors.hpp"

namespace dqcc {

CompiledMethod compile_with(const Circuit& c, const std::string& method,
                            const CompileOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  CompiledMethod m;
  m.method = method;
  if (method == "greedy")
    m.packing = greedy_pack(c, opt.greedy);
  else if (method == "baseline")
    m.packing = baseline_pack(c);
  else
    throw std::invalid_argument("unknown method: " + method);

  const Hypergraph h = build_hypergraph(m.packing);
  PartitionOptions po;
  po.k = opt.k;
  po.capacity = opt.capacity;
  po.restarts = opt.restarts;
  po.passes = opt.passes;
  po.seed = opt.seed;
  m.partition = partition(h, po);
  m.cost = connectivity_cost(h, m.partition);
  m.hg_edges = static_cast<long>(h.edges.size());
  for (const Hyperedge& e : h.edges) m.hg_weight += e.weight;

  const long direct =
      distribution_cost(m.packing, allocation_from_partition(m.partition, opt.k, 1));
  if (m.cost != direct)
    throw InvariantError("partition objective disagrees with the placement cost");

  m.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  return m;
}

CompileReport compile_circuit(const Circuit& c, const CompileOptions& opt,
                              const std::vector<std::string>& methods) {
  CompileReport r;
  r.circuit = c.name;
  r.n = c.n;
  r.k = opt.k;
  r.capacity = opt.capacity < 0 ? c.n / opt.k + 1 : opt.capacity;
  r.seed = opt.seed;
  for (const std::string& m : methods) r.methods.push_back(compile_with(c, m, opt));
  return r;
}

void write_report_json(const CompileReport& r, std::ostream& out) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["circuit"] = r.circuit;
  j["n"] = r.n;
  j["k"] = r.k;
  j["capacity"] = r.capacity;
  j["seed"] = r.seed;
  j["warnings"] = r.warnings;
  nlohmann::json ms = nlohmann::json::array();
  for (const CompiledMethod& m : r.methods) {
    ms.push_back({{"method", m.method},
                  {"packets", m.packing.packets.size()},
                  {"loose", m.packing.loose.size()},
                  {"cost", m.cost},
                  {"hypergraph", {{"vertices", r.n},
                                  {"edges", m.hg_edges},
                                  {"total_weight", m.hg_weight}}},
                  {"partition", m.partition},
                  {"wall_ms", m.wall_ms}});
  }
  j["methods"] = std::move(ms);
  out << j.dump(2) << '\n';
}

}  // namespace dqcc
