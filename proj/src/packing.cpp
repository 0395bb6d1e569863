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

#include "dqcc/packing.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>

#include "dqcc/errors.hpp"

namespace dqcc {

namespace {

void register_insert(std::vector<int>& reg, int q) {
  auto it = std::lower_bound(reg.begin(), reg.end(), q);
  if (it == reg.end() || *it != q) reg.insert(it, q);
}

bool register_contains(const std::vector<int>& reg, int q) {
  return std::binary_search(reg.begin(), reg.end(), q);
}

void add_member(GatePacket& p, const Gate& g) {
  for (int q : g.support()) register_insert(p.sub_register, q);
  p.members.push_back(g);
}

// Single-qubit gates sit on the root only when they preserve the two-branch
// form, i.e. when they are diagonal or anti-diagonal.
bool root_compatible(const Gate& g) {
  GateClass c = classify(g);
  return c.diagonal || c.anti_diagonal;
}

bool single_absorbable(const Gate& g, const GatePacket& p) {
  if (!register_contains(p.sub_register, g.target)) return false;
  return g.target != p.root || root_compatible(g);
}

Gate flipped(const Gate& g) {
  Gate f = g;
  std::swap(f.control, f.target);
  return f;
}

GatePacket fresh_packet(const Gate& g) {
  GatePacket p;
  p.root = g.control;
  p.sub_register = {std::min(g.control, g.target),
                    std::max(g.control, g.target)};
  p.members = {g};
  return p;
}

}  // namespace

PackingResult baseline_pack(const Circuit& c) {
  PackingResult out;
  out.n = c.n;
  std::optional<GatePacket> cur;
  std::vector<Gate> pending;  // singles seen since the last member

  auto emit_loose = [&](Gate g) {
    out.order.push_back({false, static_cast<int>(out.loose.size())});
    out.loose.push_back(std::move(g));
  };
  auto close = [&]() {
    if (cur) {
      // Absorb the longest absorbable prefix; stopping at the first misfit
      // keeps same-qubit singles in their original relative order.
      std::size_t keep = 0;
      while (keep < pending.size() && single_absorbable(pending[keep], *cur)) {
        add_member(*cur, pending[keep]);
        ++keep;
      }
      pending.erase(pending.begin(), pending.begin() + keep);
      out.order.push_back({true, static_cast<int>(out.packets.size())});
      out.packets.push_back(std::move(*cur));
      cur.reset();
    }
    for (Gate& g : pending) emit_loose(std::move(g));
    pending.clear();
  };

  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::Single) {
      pending.push_back(g);
      continue;
    }
    const bool joins =
        cur && g.control == cur->root &&
        std::all_of(pending.begin(), pending.end(), [&](const Gate& p) {
          return single_absorbable(p, *cur);
        });
    if (joins) {
      for (const Gate& p : pending) add_member(*cur, p);
      pending.clear();
      add_member(*cur, g);
    } else {
      close();
      cur = fresh_packet(g);
    }
  }
  close();
  return out;
}

namespace {

class GreedyBuilder {
 public:
  GreedyBuilder(const Circuit& c, const GreedyOptions& opts)
      : n_(c.n), opts_(opts) {
    for (const Gate& g : c.gates) {
      if (g.kind == GateKind::Single)
        place_single(g);
      else
        place_controlled(g);
    }
  }

  PackingResult finish() {
    PackingResult out;
    out.n = n_;
    merge_passes();
    // Compact away packets dissolved by merging.
    std::vector<int> remap(packets_.size(), -1);
    for (const Item& it : items_) {
      if (it.packet >= 0) {
        remap[it.packet] = static_cast<int>(out.packets.size());
        out.packets.push_back(std::move(packets_[it.packet]));
        out.order.push_back({true, remap[it.packet]});
      } else {
        out.order.push_back({false, static_cast<int>(out.loose.size())});
        out.loose.push_back(std::move(loose_[it.loose]));
      }
    }
    return out;
  }

 private:
  struct Item {
    int packet = -1;
    int loose = -1;
  };

  // True when g commutes with every gate placed after position pos, checking
  // at most the configured window of gates.
  bool can_hoist(const Gate& g, std::size_t pos) const {
    int budget = opts_.window;
    for (std::size_t i = pos + 1; i < items_.size(); ++i) {
      const Item& it = items_[i];
      if (it.packet >= 0) {
        for (const Gate& m : packets_[it.packet].members) {
          if (--budget < 0 || !commutes(g, m)) return false;
        }
      } else {
        if (--budget < 0 || !commutes(g, loose_[it.loose])) return false;
      }
    }
    return true;
  }

  void emit_loose(const Gate& g) {
    items_.push_back({-1, static_cast<int>(loose_.size())});
    loose_.push_back(g);
  }

  int open_packet(const Gate& g) {
    int idx = static_cast<int>(packets_.size());
    packets_.push_back(fresh_packet(g));
    packet_pos_.push_back(items_.size());
    items_.push_back({idx, -1});
    open_[packets_[idx].root] = idx;
    return idx;
  }

  void place_single(const Gate& g) {
    // Candidate packets that already cover this qubit, latest first: a
    // commutation failure there repeats at every earlier position.
    std::vector<int> cands;
    for (const auto& [root, idx] : open_)
      if (register_contains(packets_[idx].sub_register, g.target))
        cands.push_back(idx);
    std::sort(cands.begin(), cands.end(), [&](int lhs, int rhs) {
      return packet_pos_[lhs] > packet_pos_[rhs];
    });
    for (int idx : cands) {
      if (g.target == packets_[idx].root && !root_compatible(g)) continue;
      if (!can_hoist(g, packet_pos_[idx])) break;
      add_member(packets_[idx], g);
      return;
    }
    emit_loose(g);
  }

  // A diagonal block factors across its endpoints: with u = diag(a, b),
  // the gate from c onto t equals u1(arg a) on c times a controlled phase
  // from t onto c, so it can join a packet rooted at its target. When a is
  // 1 the factorization degenerates to a plain control swap.
  void add_flipped(GatePacket& p, const Gate& g) {
    const cplx a = g.u(0, 0);
    const cplx b = g.u(1, 1);
    if (std::abs(a - cplx(1.0)) < 1e-13) {
      add_member(p, flipped(g));
      return;
    }
    add_member(p, controlled(g.target, g.control, mat_phase(std::arg(b / a)),
                             "cu1", {std::arg(b / a)}));
    add_member(p, single(g.control, mat_phase(std::arg(a)), "u1",
                         {std::arg(a)}));
  }

  void place_controlled(const Gate& g) {
    const GateClass cls = classify(g);
    struct Cand {
      int idx;
      bool flip;
    };
    std::vector<Cand> cands;
    if (auto it = open_.find(g.control); it != open_.end())
      cands.push_back({it->second, false});
    if (cls.diagonal) {
      if (auto it = open_.find(g.target); it != open_.end())
        cands.push_back({it->second, true});
    }
    // Prefer a register that already holds both endpoints (joining cannot
    // grow it); break remaining ties toward the older packet.
    std::stable_sort(cands.begin(), cands.end(), [&](const Cand& x, const Cand& y) {
      const GatePacket& px = packets_[x.idx];
      const GatePacket& py = packets_[y.idx];
      const bool bx = register_contains(px.sub_register, g.control) &&
                      register_contains(px.sub_register, g.target);
      const bool by = register_contains(py.sub_register, g.control) &&
                      register_contains(py.sub_register, g.target);
      if (bx != by) return bx;
      return packet_pos_[x.idx] < packet_pos_[y.idx];
    });
    for (const Cand& cand : cands) {
      // Hoisting depends only on the unitary, which the flip preserves.
      if (can_hoist(g, packet_pos_[cand.idx])) {
        if (cand.flip)
          add_flipped(packets_[cand.idx], g);
        else
          add_member(packets_[cand.idx], g);
        return;
      }
    }
    const int root =
        cls.control_symmetric ? std::min(g.control, g.target) : g.control;
    open_.erase(root);
    open_packet(root == g.control ? g : flipped(g));
  }

  // Folds a packet into the previous one with the same root whenever every
  // gate between them commutes with all its members.
  void merge_passes() {
    for (int pass = 0; pass < opts_.max_merge_passes; ++pass) {
      bool changed = false;
      std::vector<Item> merged;
      std::vector<std::size_t> new_pos(packets_.size(), 0);
      std::map<int, int> last_by_root;  // root -> packet index in `merged`
      auto gates_commute_after = [&](std::size_t from, const GatePacket& q) {
        int budget = opts_.window * 8;
        auto clears = [&](const Gate& x) {
          for (const Gate& m : q.members)
            if (--budget < 0 || !commutes(x, m)) return false;
          return true;
        };
        for (std::size_t i = from + 1; i < merged.size(); ++i) {
          const Item& it = merged[i];
          if (it.packet >= 0) {
            for (const Gate& x : packets_[it.packet].members)
              if (!clears(x)) return false;
          } else if (!clears(loose_[it.loose])) {
            return false;
          }
        }
        return true;
      };
      for (const Item& it : items_) {
        if (it.packet < 0) {
          merged.push_back(it);
          continue;
        }
        GatePacket& q = packets_[it.packet];
        auto prev = last_by_root.find(q.root);
        if (prev != last_by_root.end() &&
            gates_commute_after(new_pos[prev->second], q)) {
          GatePacket& p = packets_[prev->second];
          for (const Gate& m : q.members) add_member(p, m);
          changed = true;
          continue;
        }
        new_pos[it.packet] = merged.size();
        last_by_root[q.root] = it.packet;
        merged.push_back(it);
      }
      items_ = std::move(merged);
      packet_pos_.assign(packets_.size(), 0);
      for (std::size_t i = 0; i < items_.size(); ++i)
        if (items_[i].packet >= 0) packet_pos_[items_[i].packet] = i;
      if (!changed) break;
    }
  }

  int n_;
  GreedyOptions opts_;
  std::vector<GatePacket> packets_;
  std::vector<Gate> loose_;
  std::vector<Item> items_;
  std::vector<std::size_t> packet_pos_;
  std::map<int, int> open_;  // root -> packet index
};

}  // namespace

PackingResult greedy_pack(const Circuit& c, const GreedyOptions& opts) {
  GreedyBuilder builder(c, opts);
  return builder.finish();
}

void validate_packing(const PackingResult& r) {
  std::size_t seen_packets = 0, seen_loose = 0;
  for (const ProgramItem& it : r.order) {
    if (it.is_packet) {
      if (it.index < 0 || it.index >= static_cast<int>(r.packets.size()))
        throw InvariantError("order references a missing packet");
      ++seen_packets;
    } else {
      if (it.index < 0 || it.index >= static_cast<int>(r.loose.size()))
        throw InvariantError("order references a missing loose gate");
      ++seen_loose;
    }
  }
  if (seen_packets != r.packets.size() || seen_loose != r.loose.size())
    throw InvariantError("order does not cover the program exactly once");

  for (const Gate& g : r.loose) {
    if (g.kind != GateKind::Single)
      throw InvariantError("controlled gate left outside every packet");
    if (g.target < 0 || g.target >= r.n)
      throw InvariantError("loose gate out of range");
  }

  for (const GatePacket& p : r.packets) {
    if (p.members.empty()) throw InvariantError("empty packet");
    if (!register_contains(p.sub_register, p.root))
      throw InvariantError("root missing from sub-register");
    if (!std::is_sorted(p.sub_register.begin(), p.sub_register.end()))
      throw InvariantError("sub-register not sorted");
    if (p.sub_register.front() < 0 || p.sub_register.back() >= r.n)
      throw InvariantError("sub-register out of range");
    for (const Gate& g : p.members) {
      for (int q : g.support())
        if (!register_contains(p.sub_register, q))
          throw InvariantError("member acts outside the sub-register");
      if (g.kind == GateKind::Controlled) {
        if (g.control != p.root)
          throw InvariantError("controlled member not rooted on the packet");
      } else if (g.target == p.root && !root_compatible(g)) {
        throw InvariantError("root single-qubit member must be (anti)diagonal");
      }
    }
  }
}

Circuit replay(const PackingResult& r) {
  Circuit c;
  c.n = r.n;
  for (const ProgramItem& it : r.order) {
    if (it.is_packet) {
      for (const Gate& g : r.packets[it.index].members) c.push(g);
    } else {
      c.push(r.loose[it.index]);
    }
  }
  return c;
}

ComplexMatrix packet_unitary(const GatePacket& p) {
  const int m = static_cast<int>(p.sub_register.size());
  if (m > 11) throw TooLargeError("packet register too wide for a dense unitary");
  auto pos = [&](int q) {
    return static_cast<int>(std::lower_bound(p.sub_register.begin(),
                                             p.sub_register.end(), q) -
                            p.sub_register.begin());
  };
  Circuit c;
  c.n = m;
  for (const Gate& g : p.members) {
    Gate mapped = g;
    mapped.target = pos(g.target);
    if (g.kind == GateKind::Controlled) mapped.control = pos(g.control);
    c.push(mapped);
  }
  return circuit_unitary(c);
}

PacketBlocks packet_blocks(const GatePacket& p) {
  std::vector<int> slots;  // register order with the root removed
  for (int q : p.sub_register)
    if (q != p.root) slots.push_back(q);
  auto slot_of = [&](int q) {
    return static_cast<int>(std::lower_bound(slots.begin(), slots.end(), q) -
                            slots.begin());
  };

  PacketBlocks bl;
  bl.a.assign(slots.size(), ComplexMatrix::identity(2));
  bl.b.assign(slots.size(), ComplexMatrix::identity(2));

  for (const Gate& g : p.members) {
    if (g.kind == GateKind::Controlled) {
      if (g.control != p.root)
        throw InvariantError("controlled member not rooted on the packet");
      const int s = slot_of(g.target);
      bl.b[s] = mul(g.u, bl.b[s]);
    } else if (g.target == p.root) {
      if (is_diagonal(g.u)) {
        bl.lambda0 *= g.u(0, 0);
        bl.lambda1 *= g.u(1, 1);
      } else if (is_anti_diagonal(g.u)) {
        // u maps |0> -> u10 |1> and |1> -> u01 |0>, which exchanges the two
        // branches and extends D by X.
        bl.flip = !bl.flip;
        std::swap(bl.a, bl.b);
        const cplx l0 = bl.lambda0, l1 = bl.lambda1;
        bl.lambda0 = g.u(0, 1) * l1;
        bl.lambda1 = g.u(1, 0) * l0;
      } else {
        throw InvariantError("root single-qubit member must be (anti)diagonal");
      }
    } else {
      const int s = slot_of(g.target);
      bl.a[s] = mul(g.u, bl.a[s]);
      bl.b[s] = mul(g.u, bl.b[s]);
    }
  }
  return bl;
}

ComplexMatrix blocks_unitary(const GatePacket& p, const PacketBlocks& bl) {
  const int m = static_cast<int>(p.sub_register.size());
  if (m > 11) throw TooLargeError("packet register too wide for a dense unitary");
  ComplexMatrix out(std::size_t{1} << m);
  for (int s = 0; s < 2; ++s) {
    // Root factor |s><s| D with D in {I, X}.
    ComplexMatrix rootf(2);
    rootf(s, bl.flip ? s ^ 1 : s) = s == 0 ? bl.lambda0 : bl.lambda1;
    ComplexMatrix term = ComplexMatrix::identity(1);
    int slot = 0;
    for (int q : p.sub_register) {
      if (q == p.root) {
        term = kron(term, rootf);
      } else {
        term = kron(term, s == 0 ? bl.a[slot] : bl.b[slot]);
        ++slot;
      }
    }
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += term.a[i];
  }
  return out;
}

double blocks_fit_error(const GatePacket& p, const PacketBlocks& bl,
                        SplitMix64& rng, int trials) {
  std::vector<int> slots;
  for (int q : p.sub_register)
    if (q != p.root) slots.push_back(q);
  auto slot_of = [&](int q) {
    return static_cast<int>(std::lower_bound(slots.begin(), slots.end(), q) -
                            slots.begin());
  };
  using Vec2 = std::array<cplx, 2>;
  auto apply2 = [](const ComplexMatrix& u, const Vec2& v) {
    return Vec2{u(0, 0) * v[0] + u(0, 1) * v[1],
                u(1, 0) * v[0] + u(1, 1) * v[1]};
  };

  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Vec2> init(slots.size());
    for (Vec2& v : init) {
      v = {cplx(rng.uniform() - 0.5, rng.uniform() - 0.5),
           cplx(rng.uniform() - 0.5, rng.uniform() - 0.5)};
      double norm = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
      v[0] /= norm;
      v[1] /= norm;
    }
    for (int r0 = 0; r0 < 2; ++r0) {
      // Forward pass: a basis root state stays a basis state under every
      // member, so the joint state remains a scaled product.
      int r = r0;
      cplx scale(1.0, 0.0);
      std::vector<Vec2> w = init;
      for (const Gate& g : p.members) {
        if (g.kind == GateKind::Controlled) {
          if (r == 1) w[slot_of(g.target)] = apply2(g.u, w[slot_of(g.target)]);
        } else if (g.target == p.root) {
          if (is_diagonal(g.u)) {
            scale *= g.u(r, r);
          } else {
            scale *= g.u(r ^ 1, r);
            r ^= 1;
          }
        } else {
          w[slot_of(g.target)] = apply2(g.u, w[slot_of(g.target)]);
        }
      }
      // Block prediction for the same input.
      const int rp = bl.flip ? r0 ^ 1 : r0;
      if (rp != r) return 1.0;
      const cplx plambda = rp == 0 ? bl.lambda0 : bl.lambda1;
      cplx ratio_product(1.0, 0.0);
      for (std::size_t s = 0; s < slots.size(); ++s) {
        Vec2 pw = apply2(rp == 0 ? bl.a[s] : bl.b[s], init[s]);
        const int lead = std::norm(pw[0]) >= std::norm(pw[1]) ? 0 : 1;
        if (std::abs(pw[lead]) < 1e-12) {
          worst = std::max(worst, std::abs(w[s][0]) + std::abs(w[s][1]));
          continue;
        }
        const cplx ratio = w[s][lead] / pw[lead];
        ratio_product *= ratio;
        worst = std::max(worst, std::abs(w[s][0] - ratio * pw[0]));
        worst = std::max(worst, std::abs(w[s][1] - ratio * pw[1]));
      }
      // Per-slot factors must multiply back into the branch scalar.
      worst = std::max(worst, std::abs(scale - plambda * ratio_product));
    }
  }
  return worst;
}

}  // namespace dqcc
