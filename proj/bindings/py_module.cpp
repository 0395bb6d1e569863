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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dqcc/benchmark.hpp"
#include "dqcc/distributed.hpp"
#include "dqcc/errors.hpp"
#include "dqcc/hypergraph.hpp"
#include "dqcc/packing.hpp"
#include "dqcc/pipeline.hpp"
#include "dqcc/qasm.hpp"
#include "dqcc/simulate.hpp"

namespace py = pybind11;
using namespace dqcc;

namespace {

std::string program_json(const DistributedProgram& p) {
  std::ostringstream os;
  write_json(p, os);
  return os.str();
}

std::string report_json(const CompileReport& r) {
  std::ostringstream os;
  write_report_json(r, os);
  return os.str();
}

CompileOptions make_options(int k, int capacity, std::uint64_t seed,
                            int restarts, int passes, int comm_per_qpu,
                            int window, int merge_passes) {
  CompileOptions opt;
  opt.k = k;
  opt.capacity = capacity;
  opt.seed = seed;
  opt.restarts = restarts;
  opt.passes = passes;
  opt.comm_per_qpu = comm_per_qpu;
  opt.greedy.window = window;
  opt.greedy.max_merge_passes = merge_passes;
  return opt;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Compiler core: gate packing, hypergraph partitioning, and "
            "teleportation-based program emission for multi-processor "
            "quantum circuits.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError",
                                          PyExc_RuntimeError);
  py::register_exception<InvariantError>(m, "InvariantError",
                                         PyExc_RuntimeError);
  py::register_exception<TooLargeError>(m, "TooLargeError",
                                        PyExc_RuntimeError);

  py::class_<Gate>(m, "Gate")
      .def_readonly("name", &Gate::name)
      .def_readonly("target", &Gate::target)
      .def_readonly("params", &Gate::params)
      .def_property_readonly(
          "control",
          [](const Gate& g) -> py::object {
            if (g.kind != GateKind::Controlled) return py::none();
            return py::int_(g.control);
          })
      .def_property_readonly(
          "is_controlled",
          [](const Gate& g) { return g.kind == GateKind::Controlled; })
      .def("support", &Gate::support)
      .def("__repr__", [](const Gate& g) {
        std::string s = "<Gate " + g.name;
        if (g.kind == GateKind::Controlled)
          s += " q" + std::to_string(g.control);
        s += " q" + std::to_string(g.target) + ">";
        return s;
      });

  py::class_<Circuit>(m, "Circuit")
      .def_readonly("n", &Circuit::n)
      .def_readonly("name", &Circuit::name)
      .def_readonly("gates", &Circuit::gates)
      .def("__len__", [](const Circuit& c) { return c.gates.size(); })
      .def("__repr__", [](const Circuit& c) {
        return "<Circuit " + (c.name.empty() ? "unnamed" : c.name) + ", " +
               std::to_string(c.n) + " qubits, " +
               std::to_string(c.gates.size()) + " gates>";
      });

  py::class_<GatePacket>(m, "GatePacket")
      .def_readonly("root", &GatePacket::root)
      .def_readonly("sub_register", &GatePacket::sub_register)
      .def_readonly("members", &GatePacket::members)
      .def("__len__",
           [](const GatePacket& p) { return p.members.size(); })
      .def("__repr__", [](const GatePacket& p) {
        return "<GatePacket root=q" + std::to_string(p.root) + ", " +
               std::to_string(p.members.size()) + " members, register " +
               std::to_string(p.sub_register.size()) + ">";
      });

  py::class_<PackingResult>(m, "PackingResult")
      .def_readonly("n", &PackingResult::n)
      .def_readonly("packets", &PackingResult::packets)
      .def_property_readonly(
          "loose_gates",
          [](const PackingResult& r) { return r.loose.size(); })
      .def("replay", &replay)
      .def("__repr__", [](const PackingResult& r) {
        return "<PackingResult " + std::to_string(r.packets.size()) +
               " packets>";
      });

  py::class_<Hyperedge>(m, "Hyperedge")
      .def_readonly("pins", &Hyperedge::pins)
      .def_readonly("weight", &Hyperedge::weight);

  py::class_<Hypergraph>(m, "Hypergraph")
      .def_readonly("n", &Hypergraph::n)
      .def_readonly("edges", &Hypergraph::edges)
      .def("__repr__", [](const Hypergraph& h) {
        return "<Hypergraph " + std::to_string(h.n) + " vertices, " +
               std::to_string(h.edges.size()) + " edges>";
      });

  py::class_<Allocation>(m, "Allocation")
      .def_readonly("n_data", &Allocation::n_data)
      .def_readonly("k", &Allocation::k)
      .def_readonly("comm_per_qpu", &Allocation::comm_per_qpu)
      .def_readonly("qpu_of", &Allocation::qpu_of)
      .def("total_qubits", &Allocation::total_qubits);

  py::class_<DistributedProgram>(m, "DistributedProgram")
      .def_readonly("epr_count", &DistributedProgram::epr_count)
      .def_readonly("n_cbits", &DistributedProgram::n_cbits)
      .def_property_readonly("alloc",
                             [](const DistributedProgram& p) {
                               return p.alloc;
                             })
      .def("__len__",
           [](const DistributedProgram& p) { return p.events.size(); })
      .def("to_qasm",
           [](const DistributedProgram& p) { return render_qasm(p); })
      .def("to_json", &program_json)
      .def("__repr__", [](const DistributedProgram& p) {
        return "<DistributedProgram " + std::to_string(p.events.size()) +
               " events, " + std::to_string(p.epr_count) + " EPR pairs>";
      });

  py::class_<VerifyOutcome>(m, "VerifyOutcome")
      .def_readonly("ok", &VerifyOutcome::ok)
      .def_readonly("max_deviation", &VerifyOutcome::max_deviation)
      .def_readonly("states_checked", &VerifyOutcome::states_checked)
      .def("__bool__", [](const VerifyOutcome& v) { return v.ok; });

  py::class_<CompiledMethod>(m, "CompiledMethod")
      .def_readonly("method", &CompiledMethod::method)
      .def_readonly("packing", &CompiledMethod::packing)
      .def_readonly("partition", &CompiledMethod::partition)
      .def_readonly("cost", &CompiledMethod::cost)
      .def_readonly("wall_ms", &CompiledMethod::wall_ms);

  py::class_<CompileReport>(m, "CompileReport")
      .def_readonly("circuit", &CompileReport::circuit)
      .def_readonly("n", &CompileReport::n)
      .def_readonly("k", &CompileReport::k)
      .def_readonly("capacity", &CompileReport::capacity)
      .def_readonly("warnings", &CompileReport::warnings)
      .def_readonly("methods", &CompileReport::methods)
      .def("to_json", &report_json);

  m.def(
      "parse_qasm",
      [](const std::string& text) {
        FrontendResult r = parse_qasm(text);
        return py::make_tuple(r.circuit, r.warnings);
      },
      py::arg("text"),
      "Parses OpenQASM 2.0 text; returns (circuit, warnings).");
  m.def(
      "parse_qasm_file",
      [](const std::string& path) {
        FrontendResult r = parse_qasm_file(path);
        return py::make_tuple(r.circuit, r.warnings);
      },
      py::arg("path"),
      "Parses an OpenQASM 2.0 file; returns (circuit, warnings).");
  m.def(
      "random_circuit",
      [](int n, double p_single, long stop_at, std::uint64_t seed) {
        RandomCircuitConfig cfg;
        cfg.n = n;
        cfg.p_single = p_single;
        cfg.stop_at = stop_at;
        cfg.seed = seed;
        return random_circuit(cfg);
      },
      py::arg("n"), py::arg("p_single") = 0.2, py::arg("stop_at") = -1,
      py::arg("seed") = 0,
      "Seeded benchmark circuit over {h, x, rz, cx, crz}; stops after "
      "stop_at two-qubit gates (default n*n).");

  m.def("baseline_pack", &baseline_pack, py::arg("circuit"),
        "Groups gates into packets without reordering.");
  m.def(
      "greedy_pack",
      [](const Circuit& c, int window, int merge_passes) {
        GreedyOptions o;
        o.window = window;
        o.max_merge_passes = merge_passes;
        return greedy_pack(c, o);
      },
      py::arg("circuit"), py::arg("window") = 32,
      py::arg("merge_passes") = 10,
      "Groups gates into packets, commuting them backward to pack more per "
      "root.");
  m.def("replay", &replay, py::arg("packing"),
        "Flattens a grouping back into a circuit.");
  m.def("equivalent", &equivalent, py::arg("a"), py::arg("b"),
        py::arg("tol") = 1e-8,
        "Unitary equivalence up to global phase (at most 10 qubits).");

  m.def("build_hypergraph", &build_hypergraph, py::arg("packing"),
        "One weighted edge per distinct packet register.");
  m.def(
      "partition",
      [](const Hypergraph& h, int k, int capacity, int restarts, int passes,
         std::uint64_t seed) {
        PartitionOptions o;
        o.k = k;
        o.capacity = capacity;
        o.restarts = restarts;
        o.passes = passes;
        o.seed = seed;
        return partition(h, o);
      },
      py::arg("hypergraph"), py::arg("k") = 2, py::arg("capacity") = -1,
      py::arg("restarts") = 16, py::arg("passes") = 8, py::arg("seed") = 1,
      "Balanced k-way partition minimizing the connectivity objective.");
  m.def("connectivity_cost", &connectivity_cost, py::arg("hypergraph"),
        py::arg("part"), "Sum over edges of weight * (parts spanned - 1).");

  m.def("allocation_from_partition", &allocation_from_partition,
        py::arg("part"), py::arg("k"), py::arg("comm_per_qpu") = 2);
  m.def("distribution_cost", &distribution_cost, py::arg("packing"),
        py::arg("alloc"),
        "EPR pairs the grouping consumes under the allocation.");
  m.def("emit", &emit, py::arg("packing"), py::arg("alloc"),
        "Lowers a grouping to a teleportation-based distributed program.");
  m.def("verify", &verify_distributed, py::arg("original"),
        py::arg("program"), py::arg("random_states") = 3, py::arg("seed") = 7,
        py::arg("tol") = 1e-8,
        "Simulates the distributed program against the original circuit.");

  m.def(
      "compile",
      [](const Circuit& c, int k, int capacity, std::uint64_t seed,
         int restarts, int passes, int comm_per_qpu, int window,
         int merge_passes, const std::vector<std::string>& methods) {
        return compile_circuit(c,
                               make_options(k, capacity, seed, restarts,
                                            passes, comm_per_qpu, window,
                                            merge_passes),
                               methods);
      },
      py::arg("circuit"), py::arg("k") = 2, py::arg("capacity") = -1,
      py::arg("seed") = 0, py::arg("restarts") = 16, py::arg("passes") = 8,
      py::arg("comm_per_qpu") = 2, py::arg("window") = 32,
      py::arg("merge_passes") = 10,
      py::arg("methods") = std::vector<std::string>{"baseline", "greedy"},
      "Full pipeline: group, fold to a hypergraph, partition, and bill.");

  m.attr("__version__") = DQCC_VERSION;
}
