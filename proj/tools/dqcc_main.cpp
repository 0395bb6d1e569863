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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dqcc/benchmark.hpp"
#include "dqcc/distributed.hpp"
#include "dqcc/errors.hpp"
#include "dqcc/pipeline.hpp"
#include "dqcc/qasm.hpp"

#ifndef DQCC_VERSION
#define DQCC_VERSION "0.0.0"
#endif

namespace {

using namespace dqcc;

constexpr int kExitParse = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitTooLarge = 4;

struct CompileArgs {
  std::string input;
  int qpus = 2;
  int capacity = -1;
  std::uint64_t seed = 0;
  bool no_reorder = false;
  int comm_per_qpu = 2;
  std::string emit_json;
  std::string emit_qasm;
  std::string dump_hgr;
  std::string report_path;
};

int cmd_compile(const CompileArgs& args) {
  FrontendResult fr = parse_qasm_file(args.input);
  for (const std::string& w : fr.warnings) std::cerr << "warning: " << w << '\n';

  CompileOptions opt;
  opt.k = args.qpus;
  opt.capacity = args.capacity;
  opt.seed = args.seed;
  CompileReport report = compile_circuit(fr.circuit, opt);
  report.warnings = fr.warnings;

  const CompiledMethod& chosen =
      args.no_reorder ? report.methods[0] : report.methods[1];
  Allocation alloc =
      allocation_from_partition(chosen.partition, opt.k, args.comm_per_qpu);
  DistributedProgram program = emit(chosen.packing, alloc);
  if (program.epr_count != chosen.cost)
    throw InvariantError("emitted program cost diverged from the report");

  if (!args.dump_hgr.empty()) {
    std::ofstream out(args.dump_hgr);
    write_hmetis(build_hypergraph(chosen.packing), out);
  }
  if (!args.emit_json.empty()) {
    std::ofstream out(args.emit_json);
    write_json(program, out);
  }
  if (!args.emit_qasm.empty()) {
    std::ofstream out(args.emit_qasm);
    out << render_qasm(program);
  }

  std::ostringstream body;
  write_report_json(report, body);
  nlohmann::json j = nlohmann::json::parse(body.str());
  j["input"] = args.input;
  j["tool_version"] = DQCC_VERSION;
  j["emitted_method"] = chosen.method;
  j["epr_consumed"] = program.epr_count;
  const std::string text = j.dump(2) + "\n";
  if (args.report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(args.report_path);
    out << text;
  }
  return 0;
}

struct VerifyArgs {
  std::string input;
  int qpus = 2;
  std::uint64_t seed = 0;
};

int cmd_verify(const VerifyArgs& args) {
  FrontendResult fr = parse_qasm_file(args.input);
  const int n = fr.circuit.n;
  if (n > 10)
    throw TooLargeError("too large to verify: " + std::to_string(n) +
                        " data qubits (limit 10)");
  int comm = 2;
  while (comm > 0 && n + args.qpus * comm > 12) --comm;
  if (comm == 0)
    throw TooLargeError("too large to verify: no room for communication "
                        "qubits under the 12-qubit cap");

  CompileOptions opt;
  opt.k = args.qpus;
  opt.seed = args.seed;
  CompiledMethod m = compile_with(fr.circuit, "greedy", opt);

  if (!equivalent(fr.circuit, replay(m.packing)))
    throw InvariantError("reordered program is not equivalent to the input");

  Allocation alloc = allocation_from_partition(m.partition, opt.k, comm);
  DistributedProgram program = emit(m.packing, alloc);
  VerifyOutcome out = verify_distributed(fr.circuit, program);
  if (!out.ok) {
    std::cerr << "fail: max deviation " << out.max_deviation << " over "
              << out.states_checked << " states\n";
    return kExitInvariant;
  }
  std::cout << "pass: " << out.states_checked
            << " states, max deviation " << out.max_deviation
            << ", epr pairs " << program.epr_count << "\n";
  return 0;
}

struct BenchArgs {
  std::string mode = "random";
  std::vector<int> qpus;
  std::vector<int> sizes;
  int reps = 10;
  double p_single = 0.2;
  std::uint64_t seed = 0;
  std::string corpus;
  std::string out_dir = ".";
};

int cmd_bench(const BenchArgs& args) {
  namespace fs = std::filesystem;
  fs::create_directories(args.out_dir);
  if (args.mode == "random") {
    const std::vector<int> ks = args.qpus.empty() ? std::vector<int>{2, 4, 8}
                                                  : args.qpus;
    const std::vector<int> ns =
        args.sizes.empty() ? std::vector<int>{8, 16, 24, 32} : args.sizes;
    ExperimentResult r =
        run_experiment(ns, ks, args.reps, args.seed, args.p_single);
    {
      std::ofstream csv(fs::path(args.out_dir) / "random.csv");
      write_csv(r, csv);
    }
    nlohmann::json cells = nlohmann::json::array();
    for (const ReductionSummary& s : summarize(r))
      cells.push_back({{"n", s.n},
                       {"k", s.k},
                       {"pairs", s.pairs},
                       {"mean_reduction", s.mean},
                       {"stddev", s.stddev}});
    nlohmann::json j = {{"schema_version", 1},
                        {"seed", args.seed},
                        {"cells", cells}};
    std::ofstream js(fs::path(args.out_dir) / "random_summary.json");
    js << j.dump(2) << '\n';
    for (int k : ks)
      std::cout << "k=" << k << " mean reduction "
                << mean_reduction(r, k) << "%\n";
    return 0;
  }
  if (args.mode == "qasm") {
    if (args.corpus.empty())
      throw std::invalid_argument("--corpus is required with --mode qasm");
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(args.corpus))
      if (entry.path().extension() == ".qasm")
        files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty())
      throw std::invalid_argument("no .qasm files under " + args.corpus);
    const int k = args.qpus.empty() ? 2 : args.qpus.front();
    std::vector<std::string> errors;
    ExperimentResult r = run_qasm_files(files, k, args.seed, &errors);
    for (const std::string& e : errors) std::cerr << "skipped: " << e << '\n';
    {
      std::ofstream csv(fs::path(args.out_dir) / "qasm.csv");
      write_csv(r, csv);
    }
    // Rows pair up per circuit: baseline first, greedy second.
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i + 1 < r.records.size(); i += 2)
      rows.push_back({{"circuit", r.records[i].circuit},
                      {"n", r.records[i].n},
                      {"greedy", r.records[i + 1].cost},
                      {"baseline", r.records[i].cost}});
    nlohmann::json j = {{"schema_version", 1}, {"k", k}, {"rows", rows}};
    std::ofstream js(fs::path(args.out_dir) / "qasm.json");
    js << j.dump(2) << '\n';
    std::cout << "wrote " << rows.size() << " circuits to " << args.out_dir
              << "\n";
    return 0;
  }
  throw std::invalid_argument("unknown mode: " + args.mode);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed quantum circuit compiler"};
  app.set_version_flag("--version", DQCC_VERSION);
  app.require_subcommand(1);

  CompileArgs cargs;
  CLI::App* compile = app.add_subcommand(
      "compile", "Partition a circuit across processors");
  compile->add_option("input", cargs.input, "OpenQASM 2.0 file")->required();
  compile->add_option("--qpus", cargs.qpus, "Processor count")
      ->check(CLI::PositiveNumber);
  compile->add_option("--capacity", cargs.capacity,
                      "Data qubits per processor (default floor(n/k)+1)");
  compile->add_option("--seed", cargs.seed, "Partitioner seed");
  compile->add_flag("--no-reorder", cargs.no_reorder,
                    "Pack consecutive gates only; no commuting moves");
  compile->add_option("--comm-per-qpu", cargs.comm_per_qpu,
                      "Communication qubits per processor")
      ->check(CLI::PositiveNumber);
  compile->add_option("--emit", cargs.emit_json,
                      "Write the distributed program as JSON");
  compile->add_option("--emit-qasm", cargs.emit_qasm,
                      "Write the distributed program as OpenQASM");
  compile->add_option("--dump-hgr", cargs.dump_hgr,
                      "Write the weighted hypergraph in hMETIS format");
  compile->add_option("--report", cargs.report_path,
                      "Write the report here instead of standard output");

  VerifyArgs vargs;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check a small circuit end to end against its distribution");
  verify->add_option("input", vargs.input, "OpenQASM 2.0 file")->required();
  verify->add_option("--qpus", vargs.qpus, "Processor count")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", vargs.seed, "Partitioner seed");

  BenchArgs bargs;
  CLI::App* bench = app.add_subcommand("bench", "Run the benchmark suites");
  bench->add_option("--mode", bargs.mode, "random or qasm");
  bench->add_option("--qpus", bargs.qpus, "Processor counts");
  bench->add_option("--sizes", bargs.sizes, "Qubit counts (random mode)");
  bench->add_option("--reps", bargs.reps, "Repetitions per cell")
      ->check(CLI::PositiveNumber);
  bench->add_option("--p-single", bargs.p_single,
                    "One-qubit round probability");
  bench->add_option("--seed", bargs.seed, "Root seed");
  bench->add_option("--corpus", bargs.corpus, "Directory of .qasm files");
  bench->add_option("--out", bargs.out_dir, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compile->parsed()) return cmd_compile(cargs);
    if (verify->parsed()) return cmd_verify(vargs);
    return cmd_bench(bargs);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const TooLargeError& e) {
    std::cerr << e.what() << '\n';
    return kExitTooLarge;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
}
