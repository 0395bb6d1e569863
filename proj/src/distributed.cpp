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

#include "dqcc/distributed.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dqcc/errors.hpp"
#include "dqcc/rng.hpp"

namespace dqcc {

Allocation allocation_from_partition(const std::vector<int>& part, int k,
                                     int comm_per_qpu) {
  Allocation a;
  a.n_data = static_cast<int>(part.size());
  a.k = k;
  a.comm_per_qpu = comm_per_qpu;
  a.qpu_of = part;
  for (int p : part)
    if (p < 0 || p >= k)
      throw InvariantError("partition labels a qubit outside [0, k)");
  return a;
}

namespace {

std::set<int> qpus_of_register(const std::vector<int>& reg,
                               const Allocation& alloc) {
  std::set<int> qpus;
  for (int q : reg) qpus.insert(alloc.qpu_of[q]);
  return qpus;
}

bool near_identity(const ComplexMatrix& u) {
  return max_abs_diff(u, ComplexMatrix::identity(u.dim)) < 1e-13;
}

}  // namespace

long distribution_cost(const PackingResult& r, const Allocation& alloc) {
  long cost = 0;
  for (const GatePacket& p : r.packets)
    cost += static_cast<long>(qpus_of_register(p.sub_register, alloc).size()) - 1;
  for (const Gate& g : r.loose)
    if (g.kind == GateKind::Controlled &&
        alloc.qpu_of[g.control] != alloc.qpu_of[g.target])
      ++cost;
  return cost;
}

namespace {

class Emitter {
 public:
  Emitter(const PackingResult& r, const Allocation& alloc) : r_(r) {
    if (static_cast<int>(alloc.qpu_of.size()) != r.n)
      throw InvariantError("allocation does not match the circuit width");
    out_.alloc = alloc;
    busy_.assign(alloc.k, std::vector<char>(std::max(alloc.comm_per_qpu, 0), 0));
  }

  DistributedProgram run() {
    for (const ProgramItem& item : r_.order) {
      if (item.is_packet) {
        emit_packet(r_.packets[item.index]);
        continue;
      }
      const Gate& g = r_.loose[item.index];
      if (g.kind == GateKind::Controlled &&
          out_.alloc.qpu_of[g.control] != out_.alloc.qpu_of[g.target]) {
        GatePacket tmp;
        tmp.root = g.control;
        tmp.sub_register = {std::min(g.control, g.target),
                            std::max(g.control, g.target)};
        tmp.members = {g};
        emit_packet(tmp);
      } else {
        gate(g);
      }
    }
    return std::move(out_);
  }

 private:
  void gate(Gate g) { out_.events.push_back(EvGate{std::move(g)}); }
  void note(std::string text) { out_.events.push_back(EvNote{std::move(text)}); }

  int acquire(int qpu) {
    for (int s = 0; s < static_cast<int>(busy_[qpu].size()); ++s)
      if (!busy_[qpu][s]) {
        busy_[qpu][s] = 1;
        return s;
      }
    throw InfeasibleError("communication qubits exhausted on processor " +
                          std::to_string(qpu));
  }
  void release(int qpu, int slot) {
    busy_[qpu][slot] = 0;
    out_.events.push_back(EvReset{out_.alloc.comm_qubit(qpu, slot)});
  }

  void emit_packet(const GatePacket& p) {
    const Allocation& alloc = out_.alloc;
    const std::set<int> qpus = qpus_of_register(p.sub_register, alloc);
    const int id = packet_no_++;
    if (qpus.size() == 1) {
      for (const Gate& g : p.members) gate(g);
      return;
    }

    const PacketBlocks bl = packet_blocks(p);
    const int home = alloc.qpu_of[p.root];
    std::vector<int> remotes;
    for (int q : qpus)
      if (q != home) remotes.push_back(q);

    std::vector<int> slots;  // non-root register qubits, in order
    for (int q : p.sub_register)
      if (q != p.root) slots.push_back(q);

    {
      std::ostringstream head;
      head << "packet " << id << ": root q" << p.root << " on qpu " << home
           << ", " << p.members.size() << " members, remotes";
      for (int q : remotes) head << ' ' << q;
      note(head.str());
    }

    if (bl.flip) gate(single(p.root, mat_x(), "x"));
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (!near_identity(bl.a[s])) gate(single(slots[s], bl.a[s], "blk"));

    // Share the root with every remote processor (cat-entangle).
    std::map<int, int> copy_of;   // remote qpu -> comm qubit with the copy
    std::map<int, int> slot_used;
    for (int j : remotes) {
      note("entangle root with qpu " + std::to_string(j));
      const int sh = acquire(home);
      const int sj = acquire(j);
      const int ch = alloc.comm_qubit(home, sh);
      const int cj = alloc.comm_qubit(j, sj);
      out_.events.push_back(EvEpr{ch, cj});
      ++out_.epr_count;
      gate(controlled(p.root, ch, mat_x(), "cx"));
      const int cb = out_.n_cbits++;
      out_.events.push_back(EvMeasure{ch, cb});
      out_.events.push_back(EvCondX{cj, cb});
      out_.events.push_back(EvCondX{ch, cb});
      release(home, sh);
      copy_of[j] = cj;
      slot_used[j] = sj;
    }

    // Every controlled block runs against the local copy of the root.
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const ComplexMatrix w = mul(bl.b[s], bl.a[s].dagger());
      if (near_identity(w)) continue;
      const int qpu = alloc.qpu_of[slots[s]];
      const int ctrl = qpu == home ? p.root : copy_of.at(qpu);
      gate(controlled(ctrl, slots[s], w, "cblk"));
    }

    // Fold the copies back into the root (cat-disentangle).
    for (int j : remotes) {
      note("disentangle root from qpu " + std::to_string(j));
      const int cj = copy_of.at(j);
      gate(single(cj, mat_h(), "h"));
      const int cb = out_.n_cbits++;
      out_.events.push_back(EvMeasure{cj, cb});
      out_.events.push_back(EvCondZ{p.root, cb});
      out_.events.push_back(EvCondX{cj, cb});
      release(j, slot_used.at(j));
    }

    if (std::abs(bl.lambda0 - cplx(1.0)) > 1e-13 ||
        std::abs(bl.lambda1 - cplx(1.0)) > 1e-13) {
      ComplexMatrix d(2);
      d(0, 0) = bl.lambda0;
      d(1, 1) = bl.lambda1;
      gate(single(p.root, d, "lam"));
    }
  }

  const PackingResult& r_;
  DistributedProgram out_;
  std::vector<std::vector<char>> busy_;
  int packet_no_ = 0;
};

}  // namespace

DistributedProgram emit(const PackingResult& r, const Allocation& alloc) {
  return Emitter(r, alloc).run();
}

namespace {

// u = e^{i alpha} u3(theta, phi, lambda)
struct Zyz {
  double theta = 0, phi = 0, lambda = 0, alpha = 0;
};

Zyz zyz_decompose(const ComplexMatrix& u) {
  Zyz z;
  const double c = std::abs(u(0, 0));
  const double s = std::abs(u(1, 0));
  z.theta = 2.0 * std::atan2(s, c);
  if (c > 1e-12) {
    z.alpha = std::arg(u(0, 0));
    if (s > 1e-12) {
      z.phi = std::arg(u(1, 0)) - z.alpha;
      z.lambda = std::arg(-u(0, 1)) - z.alpha;
    } else {
      z.phi = 0.0;
      z.lambda = std::arg(u(1, 1)) - z.alpha;
    }
  } else {
    z.alpha = std::arg(u(1, 0));
    z.phi = 0.0;
    z.lambda = std::arg(-u(0, 1)) - z.alpha;
  }
  return z;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class QasmWriter {
 public:
  explicit QasmWriter(const DistributedProgram& p) : p_(p) {}

  std::string run() {
    const Allocation& a = p_.alloc;
    os_ << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    os_ << "// " << a.k << " processors";
    for (int q = 0; q < a.k; ++q) {
      os_ << (q ? "; qpu " : ": qpu ") << q << " holds";
      bool any = false;
      for (int v = 0; v < a.n_data; ++v)
        if (a.qpu_of[v] == q) {
          os_ << (any ? "," : " ") << 'q' << v;
          any = true;
        }
      if (!any) os_ << " nothing";
    }
    os_ << '\n';
    os_ << "qreg q[" << a.n_data << "];\n";
    if (a.k * a.comm_per_qpu > 0)
      os_ << "qreg comm[" << a.k * a.comm_per_qpu << "];\n";
    for (int i = 0; i < p_.n_cbits; ++i) os_ << "creg c" << i << "[1];\n";
    for (const Event& ev : p_.events) std::visit([&](const auto& e) { emit(e); }, ev);
    return os_.str();
  }

 private:
  std::string qn(int q) const {
    if (q < p_.alloc.n_data) return "q[" + std::to_string(q) + "]";
    return "comm[" + std::to_string(q - p_.alloc.n_data) + "]";
  }

  void known_or_synth_single(const Gate& g) {
    static const std::set<std::string> plain = {"h", "x",  "y",  "z",    "s",
                                                "t", "sdg", "tdg", "sx", "sxdg"};
    static const std::set<std::string> one_param = {"rx", "ry", "rz", "u1"};
    if (plain.count(g.name) && g.params.empty()) {
      os_ << g.name << ' ' << qn(g.target) << ";\n";
      return;
    }
    if (one_param.count(g.name) && g.params.size() == 1) {
      os_ << g.name << '(' << fmt(g.params[0]) << ") " << qn(g.target) << ";\n";
      return;
    }
    if (g.name == "u3" && g.params.size() == 3) {
      os_ << "u3(" << fmt(g.params[0]) << ',' << fmt(g.params[1]) << ','
          << fmt(g.params[2]) << ") " << qn(g.target) << ";\n";
      return;
    }
    const Zyz z = zyz_decompose(g.u);  // global phase is unobservable here
    os_ << "u3(" << fmt(z.theta) << ',' << fmt(z.phi) << ',' << fmt(z.lambda)
        << ") " << qn(g.target) << ";\n";
  }

  void known_or_synth_controlled(const Gate& g) {
    static const std::set<std::string> plain = {"cx", "cy", "cz", "ch"};
    static const std::set<std::string> one_param = {"crx", "cry", "crz", "cu1"};
    if (plain.count(g.name) && g.params.empty()) {
      os_ << g.name << ' ' << qn(g.control) << ',' << qn(g.target) << ";\n";
      return;
    }
    if (one_param.count(g.name) && g.params.size() == 1) {
      os_ << g.name << '(' << fmt(g.params[0]) << ") " << qn(g.control) << ','
          << qn(g.target) << ";\n";
      return;
    }
    const Zyz z = zyz_decompose(g.u);
    os_ << "cu3(" << fmt(z.theta) << ',' << fmt(z.phi) << ',' << fmt(z.lambda)
        << ") " << qn(g.control) << ',' << qn(g.target) << ";\n";
    // The phase of u rides on the control when the block is conditioned.
    if (std::abs(z.alpha) > 1e-13)
      os_ << "u1(" << fmt(z.alpha) << ") " << qn(g.control) << ";\n";
  }

  void emit(const EvGate& e) {
    if (e.g.kind == GateKind::Single)
      known_or_synth_single(e.g);
    else
      known_or_synth_controlled(e.g);
  }
  void emit(const EvEpr& e) {
    os_ << "h " << qn(e.qa) << ";\ncx " << qn(e.qa) << ',' << qn(e.qb) << ";\n";
  }
  void emit(const EvMeasure& e) {
    os_ << "measure " << qn(e.q) << " -> c" << e.cbit << "[0];\n";
  }
  void emit(const EvCondX& e) {
    os_ << "if(c" << e.cbit << "==1) x " << qn(e.q) << ";\n";
  }
  void emit(const EvCondZ& e) {
    os_ << "if(c" << e.cbit << "==1) z " << qn(e.q) << ";\n";
  }
  void emit(const EvReset& e) { os_ << "reset " << qn(e.q) << ";\n"; }
  void emit(const EvNote& e) { os_ << "// " << e.text << "\n"; }

  const DistributedProgram& p_;
  std::ostringstream os_;
};

nlohmann::json matrix_json(const ComplexMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.dim; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.dim; ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string render_qasm(const DistributedProgram& p) {
  return QasmWriter(p).run();
}

void write_json(const DistributedProgram& p, std::ostream& out) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["allocation"] = {{"n_data", p.alloc.n_data},
                     {"qpus", p.alloc.k},
                     {"comm_per_qpu", p.alloc.comm_per_qpu},
                     {"qpu_of", p.alloc.qpu_of}};
  j["epr_count"] = p.epr_count;
  j["cbits"] = p.n_cbits;
  nlohmann::json evs = nlohmann::json::array();
  for (const Event& ev : p.events) {
    nlohmann::json e;
    if (const auto* g = std::get_if<EvGate>(&ev)) {
      e["type"] = "gate";
      e["name"] = g->g.name;
      if (g->g.kind == GateKind::Controlled)
        e["qubits"] = {g->g.control, g->g.target};
      else
        e["qubits"] = {g->g.target};
      e["params"] = g->g.params;
      e["matrix"] = matrix_json(g->g.u);
    } else if (const auto* ep = std::get_if<EvEpr>(&ev)) {
      e["type"] = "epr";
      e["qubits"] = {ep->qa, ep->qb};
    } else if (const auto* m = std::get_if<EvMeasure>(&ev)) {
      e["type"] = "measure";
      e["qubit"] = m->q;
      e["cbit"] = m->cbit;
    } else if (const auto* cx = std::get_if<EvCondX>(&ev)) {
      e["type"] = "cond_x";
      e["qubit"] = cx->q;
      e["cbit"] = cx->cbit;
    } else if (const auto* cz = std::get_if<EvCondZ>(&ev)) {
      e["type"] = "cond_z";
      e["qubit"] = cz->q;
      e["cbit"] = cz->cbit;
    } else if (const auto* rs = std::get_if<EvReset>(&ev)) {
      e["type"] = "reset";
      e["qubit"] = rs->q;
    } else if (const auto* nt = std::get_if<EvNote>(&ev)) {
      e["type"] = "note";
      e["text"] = nt->text;
    }
    evs.push_back(std::move(e));
  }
  j["events"] = std::move(evs);
  out << j.dump(2) << '\n';
}

namespace {

void coalesce(std::vector<SimBranch>& branches,
              const std::vector<int>& last_read, int now) {
  for (std::size_t i = 0; i < branches.size(); ++i) {
    for (std::size_t j = i + 1; j < branches.size();) {
      bool same = true;
      for (std::size_t c = 0; c < last_read.size() && same; ++c)
        if (last_read[c] > now && branches[i].cbits[c] != branches[j].cbits[c])
          same = false;
      if (same && max_abs_diff(branches[i].state, branches[j].state) < 1e-9) {
        branches[i].weight += branches[j].weight;
        branches.erase(branches.begin() + j);
      } else {
        ++j;
      }
    }
  }
}

}  // namespace

std::vector<SimBranch> simulate_distributed(const DistributedProgram& p,
                                            const StateVector& initial_data) {
  const int total = p.alloc.total_qubits();
  if (total > 12)
    throw TooLargeError("distributed simulation limited to 12 qubits, got " +
                        std::to_string(total));
  if (initial_data.n != p.alloc.n_data)
    throw InvariantError("initial state width does not match the allocation");

  StateVector init(total);
  std::fill(init.amp.begin(), init.amp.end(), cplx(0.0, 0.0));
  const int comm_bits = total - initial_data.n;
  for (std::size_t i = 0; i < initial_data.amp.size(); ++i)
    init.amp[i << comm_bits] = initial_data.amp[i];

  std::vector<int> last_read(p.n_cbits, -1);
  for (std::size_t i = 0; i < p.events.size(); ++i) {
    if (const auto* cx = std::get_if<EvCondX>(&p.events[i]))
      last_read[cx->cbit] = static_cast<int>(i);
    else if (const auto* cz = std::get_if<EvCondZ>(&p.events[i]))
      last_read[cz->cbit] = static_cast<int>(i);
  }

  std::vector<SimBranch> branches;
  branches.push_back({1.0, std::vector<int>(p.n_cbits, -1), std::move(init)});

  for (std::size_t idx = 0; idx < p.events.size(); ++idx) {
    const Event& ev = p.events[idx];
    if (const auto* g = std::get_if<EvGate>(&ev)) {
      for (SimBranch& b : branches) b.state.apply(g->g);
    } else if (const auto* ep = std::get_if<EvEpr>(&ev)) {
      for (SimBranch& b : branches) {
        if (b.state.prob_one(ep->qa) > 1e-9 || b.state.prob_one(ep->qb) > 1e-9)
          throw InvariantError("entangling a communication qubit not in |0>");
        b.state.apply(single(ep->qa, mat_h(), "h"));
        b.state.apply(controlled(ep->qa, ep->qb, mat_x(), "cx"));
      }
    } else if (const auto* m = std::get_if<EvMeasure>(&ev)) {
      std::vector<SimBranch> split;
      for (SimBranch& b : branches) {
        for (int outcome = 0; outcome < 2; ++outcome) {
          SimBranch nb = b;
          const double w = nb.state.collapse(m->q, outcome);
          if (w < 1e-12) continue;
          nb.weight *= w;
          nb.cbits[m->cbit] = outcome;
          split.push_back(std::move(nb));
        }
      }
      branches = std::move(split);
      if (branches.empty()) throw InvariantError("all branches vanished");
    } else if (const auto* cx = std::get_if<EvCondX>(&ev)) {
      for (SimBranch& b : branches) {
        if (b.cbits[cx->cbit] < 0)
          throw InvariantError("classical bit read before measurement");
        if (b.cbits[cx->cbit] == 1) b.state.apply(single(cx->q, mat_x(), "x"));
      }
    } else if (const auto* cz = std::get_if<EvCondZ>(&ev)) {
      for (SimBranch& b : branches) {
        if (b.cbits[cz->cbit] < 0)
          throw InvariantError("classical bit read before measurement");
        if (b.cbits[cz->cbit] == 1) b.state.apply(single(cz->q, mat_z(), "z"));
      }
    } else if (const auto* rs = std::get_if<EvReset>(&ev)) {
      for (SimBranch& b : branches)
        if (b.state.prob_one(rs->q) > 1e-9)
          throw InvariantError("released communication qubit is not |0>");
    }
    coalesce(branches, last_read, static_cast<int>(idx));
  }
  return branches;
}

VerifyOutcome verify_distributed(const Circuit& original,
                                 const DistributedProgram& p, int random_states,
                                 std::uint64_t seed, double tol) {
  VerifyOutcome out;
  const int nd = original.n;
  if (nd != p.alloc.n_data)
    throw InvariantError("circuit width does not match the allocation");

  std::vector<StateVector> inits;
  inits.push_back(StateVector::basis(nd, 0));
  SplitMix64 rng(seed);
  for (int t = 0; t < random_states; ++t) {
    StateVector sv(nd);
    sv.amp.assign(std::size_t{1} << nd, cplx(1.0, 0.0));
    for (int q = 0; q < nd; ++q) {
      cplx v0(rng.uniform() - 0.5, rng.uniform() - 0.5);
      cplx v1(rng.uniform() - 0.5, rng.uniform() - 0.5);
      const double norm = std::sqrt(std::norm(v0) + std::norm(v1));
      v0 /= norm;
      v1 /= norm;
      const std::size_t bit = std::size_t{1} << (nd - 1 - q);
      for (std::size_t i = 0; i < sv.amp.size(); ++i)
        sv.amp[i] *= (i & bit) ? v1 : v0;
    }
    inits.push_back(std::move(sv));
  }

  const int comm_bits = p.alloc.total_qubits() - nd;
  for (const StateVector& init : inits) {
    const StateVector mono = simulate(original, init);
    StateVector expected(p.alloc.total_qubits());
    std::fill(expected.amp.begin(), expected.amp.end(), cplx(0.0, 0.0));
    for (std::size_t i = 0; i < mono.amp.size(); ++i)
      expected.amp[i << comm_bits] = mono.amp[i];
    for (const SimBranch& b : simulate_distributed(p, init)) {
      const double dev = max_abs_diff(b.state, expected);
      out.max_deviation = std::max(out.max_deviation, dev);
      if (dev > tol) out.ok = false;
    }
    ++out.states_checked;
  }
  return out;
}

}  // namespace dqcc
