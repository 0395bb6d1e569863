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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dqcc/errors.hpp"
#include "dqcc/packing.hpp"
#include "dqcc/qasm.hpp"
#include "dqcc/simulate.hpp"

using namespace dqcc;

namespace {

Circuit from_qasm(const std::string& body) {
  return parse_qasm("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n" + body).circuit;
}

std::vector<std::vector<int>> registers(const PackingResult& r) {
  std::vector<std::vector<int>> regs;
  for (const GatePacket& p : r.packets) regs.push_back(p.sub_register);
  return regs;
}

Circuit random_circuit_small(SplitMix64& rng, int n, int len) {
  const double pi = 3.14159265358979323846;
  Circuit c;
  c.n = n;
  for (int i = 0; i < len; ++i) {
    const int q = static_cast<int>(rng.uniform_int(n));
    const double pick = rng.uniform();
    if (pick < 0.35) {
      switch (rng.uniform_int(5)) {
        case 0: c.push(single(q, mat_h(), "h")); break;
        case 1: c.push(single(q, mat_t(), "t")); break;
        case 2: c.push(single(q, mat_x(), "x")); break;
        case 3: c.push(single(q, mat_rz(rng.uniform() * 2 * pi), "rz")); break;
        default:
          c.push(single(q, mat_u3(rng.uniform() * pi, rng.uniform() * 2 * pi,
                                  rng.uniform() * 2 * pi),
                        "u3"));
      }
    } else {
      int t = static_cast<int>(rng.uniform_int(n - 1));
      if (t >= q) ++t;
      switch (rng.uniform_int(4)) {
        case 0: c.push(controlled(q, t, mat_x(), "cx")); break;
        case 1: c.push(controlled(q, t, mat_z(), "cz")); break;
        case 2:
          c.push(controlled(q, t, mat_phase(rng.uniform() * 2 * pi), "cu1"));
          break;
        default:
          c.push(controlled(q, t, mat_rz(rng.uniform() * 2 * pi), "crz"));
      }
    }
  }
  return c;
}

}  // namespace

TEST_CASE("baseline keeps an interaction block in one packet") {
  Circuit c = from_qasm(
      "qreg q[3];\n"
      "cx q[0], q[1];\nrz(0.4) q[1];\ncx q[0], q[1];\n"
      "cx q[1], q[2];\nrz(0.4) q[2];\ncx q[1], q[2];\n");
  PackingResult r = baseline_pack(c);
  validate_packing(r);
  REQUIRE(r.packets.size() == 2);
  CHECK(r.packets[0].members.size() == 3);
  CHECK(r.packets[0].root == 0);
  CHECK(r.packets[1].members.size() == 3);
  CHECK(r.packets[1].root == 1);
  CHECK(r.loose.empty());
  CHECK(equivalent(c, replay(r)));
}

TEST_CASE("baseline absorbs only the order-safe prefix on close") {
  // After the member, h then t arrive on the free qubit; both fit. On the
  // root, h does not fit, so t behind it must stay loose as well.
  Circuit a = from_qasm("qreg q[2];\ncx q[0], q[1];\nh q[1];\nt q[1];\n");
  PackingResult ra = baseline_pack(a);
  validate_packing(ra);
  REQUIRE(ra.packets.size() == 1);
  CHECK(ra.packets[0].members.size() == 3);
  CHECK(ra.loose.empty());

  Circuit b = from_qasm("qreg q[2];\ncx q[0], q[1];\nh q[0];\nt q[0];\n");
  PackingResult rb = baseline_pack(b);
  validate_packing(rb);
  REQUIRE(rb.packets.size() == 1);
  CHECK(rb.packets[0].members.size() == 1);
  CHECK(rb.loose.size() == 2);
  CHECK(equivalent(b, replay(rb)));
}

TEST_CASE("baseline join requires pendings to fit the current register") {
  // t q[2] is outside the open register {0,1} at join time, so the second
  // member forces a close even though the control matches.
  Circuit c = from_qasm("qreg q[3];\ncx q[0], q[1];\nt q[2];\ncx q[0], q[2];\n");
  PackingResult r = baseline_pack(c);
  validate_packing(r);
  CHECK(r.packets.size() == 2);
  CHECK(equivalent(c, replay(r)));
}

TEST_CASE("baseline splits the controlled-swap expansion into seven packets") {
  Circuit c = from_qasm("qreg q[3];\nh q[0];\ncswap q[0], q[1], q[2];\nh q[0];\n");
  PackingResult r = baseline_pack(c);
  validate_packing(r);
  REQUIRE(r.packets.size() == 7);
  const std::vector<std::vector<int>> expected = {
      {1, 2}, {1, 2}, {0, 2}, {1, 2}, {0, 2}, {0, 1}, {1, 2}};
  CHECK(registers(r) == expected);
  const std::vector<int> roots = {2, 1, 0, 1, 0, 0, 2};
  for (std::size_t i = 0; i < roots.size(); ++i)
    CHECK(r.packets[i].root == roots[i]);
  const std::vector<std::size_t> sizes = {1, 2, 2, 2, 1, 4, 1};
  for (std::size_t i = 0; i < sizes.size(); ++i)
    CHECK(r.packets[i].members.size() == sizes[i]);
  CHECK(r.loose.size() == 6);
  CHECK(equivalent(c, replay(r)));
}

TEST_CASE("greedy packs the controlled-swap expansion tighter") {
  Circuit c = from_qasm("qreg q[3];\nh q[0];\ncswap q[0], q[1], q[2];\nh q[0];\n");
  PackingResult r = greedy_pack(c);
  validate_packing(r);
  REQUIRE(r.packets.size() == 6);
  const std::vector<std::vector<int>> expected = {
      {1, 2}, {1, 2}, {0, 2}, {1, 2}, {0, 1, 2}, {1, 2}};
  CHECK(registers(r) == expected);
  const std::vector<std::size_t> sizes = {1, 2, 2, 3, 7, 1};
  for (std::size_t i = 0; i < sizes.size(); ++i)
    CHECK(r.packets[i].members.size() == sizes[i]);
  // Only two packets touch the ancilla, down from three.
  int anc = 0;
  for (const GatePacket& p : r.packets)
    anc += std::binary_search(p.sub_register.begin(), p.sub_register.end(), 0);
  CHECK(anc == 2);
  CHECK(r.loose.size() == 3);
  CHECK(equivalent(c, replay(r)));
}

TEST_CASE("greedy rolls a fourier ladder into one packet per target") {
  Circuit c = from_qasm(
      "qreg q[4];\n"
      "h q[0];\ncu1(pi/2) q[1], q[0];\ncu1(pi/4) q[2], q[0];\ncu1(pi/8) q[3], q[0];\n"
      "h q[1];\ncu1(pi/2) q[2], q[1];\ncu1(pi/4) q[3], q[1];\n"
      "h q[2];\ncu1(pi/2) q[3], q[2];\n"
      "h q[3];\n");
  PackingResult g = greedy_pack(c);
  validate_packing(g);
  REQUIRE(g.packets.size() == 3);
  CHECK(g.packets[0].sub_register == std::vector<int>{0, 1, 2, 3});
  CHECK(g.packets[0].root == 0);
  CHECK(g.packets[1].sub_register == std::vector<int>{1, 2, 3});
  CHECK(g.packets[2].sub_register == std::vector<int>{2, 3});
  CHECK(g.loose.size() == 1);  // the first hadamard sits on a future root
  CHECK(equivalent(c, replay(g)));

  PackingResult b = baseline_pack(c);
  validate_packing(b);
  CHECK(b.packets.size() == 6);  // one per rotation, no reordering
  CHECK(equivalent(c, replay(b)));
}

TEST_CASE("greedy merge pass rescues a window-limited close") {
  Circuit c;
  c.n = 6;
  c.push(controlled(0, 1, mat_x(), "cx"));
  for (int i = 0; i < 33; ++i) c.push(single(5, mat_t(), "t"));
  c.push(controlled(0, 2, mat_x(), "cx"));
  PackingResult r = greedy_pack(c);
  validate_packing(r);
  REQUIRE(r.packets.size() == 1);
  CHECK(r.packets[0].sub_register == std::vector<int>{0, 1, 2});
  CHECK(r.loose.size() == 33);
  CHECK(equivalent(c, replay(r)));

  GreedyOptions no_merge;
  no_merge.max_merge_passes = 0;
  PackingResult unmerged = greedy_pack(c, no_merge);
  CHECK(unmerged.packets.size() == 2);
}

TEST_CASE("greedy does not hoist across a genuine obstruction") {
  Circuit c;
  c.n = 3;
  c.push(controlled(0, 1, mat_x(), "cx"));
  c.push(single(0, mat_h(), "h"));
  c.push(controlled(0, 2, mat_x(), "cx"));
  PackingResult r = greedy_pack(c);
  validate_packing(r);
  CHECK(r.packets.size() == 2);
  CHECK(r.loose.size() == 1);
  CHECK(equivalent(c, replay(r)));
}

TEST_CASE("control-symmetric gates flip toward an existing packet") {
  Circuit c;
  c.n = 3;
  c.push(controlled(0, 1, mat_z(), "cz"));
  c.push(controlled(1, 0, mat_phase(0.4), "cu1"));  // joins by flipping
  c.push(controlled(2, 0, mat_x(), "cx"));          // cannot flip
  PackingResult r = greedy_pack(c);
  validate_packing(r);
  REQUIRE(r.packets.size() == 2);
  CHECK(r.packets[0].root == 0);
  CHECK(r.packets[0].members.size() == 2);
  CHECK(r.packets[0].members[1].control == 0);
  CHECK(r.packets[1].root == 2);
  CHECK(equivalent(c, replay(r)));
}

TEST_CASE("packet blocks reproduce small packet unitaries") {
  SplitMix64 rng(99);
  const double pi = 3.14159265358979323846;
  for (int trial = 0; trial < 40; ++trial) {
    GatePacket p;
    p.root = static_cast<int>(rng.uniform_int(4));
    p.sub_register = {0, 1, 2, 3};
    const int len = 1 + static_cast<int>(rng.uniform_int(8));
    for (int i = 0; i < len; ++i) {
      const double pick = rng.uniform();
      if (pick < 0.5) {
        int t = static_cast<int>(rng.uniform_int(3));
        if (t >= p.root) ++t;
        p.members.push_back(controlled(
            p.root, t,
            mat_u3(rng.uniform() * pi, rng.uniform() * 2 * pi, rng.uniform()),
            "cu"));
      } else if (pick < 0.7) {
        ComplexMatrix u = mat_rz(rng.uniform() * 2 * pi);
        if (rng.uniform() < 0.5) u = mul(u, mat_x());  // anti-diagonal
        p.members.push_back(single(p.root, u, "r"));
      } else {
        int t = static_cast<int>(rng.uniform_int(3));
        if (t >= p.root) ++t;
        p.members.push_back(single(
            t, mat_u3(rng.uniform() * pi, rng.uniform(), rng.uniform()), "u3"));
      }
    }
    PacketBlocks bl = packet_blocks(p);
    CHECK(max_abs_diff(blocks_unitary(p, bl), packet_unitary(p)) < 1e-10);
    CHECK(blocks_fit_error(p, bl, rng) < 1e-10);
  }
}

TEST_CASE("packet blocks flag a root member that breaks the form") {
  GatePacket p;
  p.root = 0;
  p.sub_register = {0, 1};
  p.members = {controlled(0, 1, mat_x(), "cx"), single(0, mat_h(), "h")};
  CHECK_THROWS_AS(packet_blocks(p), InvariantError);
  CHECK_THROWS_AS(validate_packing([&] {
                    PackingResult r;
                    r.n = 2;
                    r.packets = {p};
                    r.order = {{true, 0}};
                    return r;
                  }()),
                  InvariantError);
}

TEST_CASE("scalable fit check matches the dense comparison") {
  GatePacket p;
  p.root = 1;
  p.sub_register = {0, 1, 2};
  p.members = {controlled(1, 0, mat_phase(0.9), "cu1"),
               single(1, mul(mat_rz(0.3), mat_x()), "xr"),
               single(2, mat_h(), "h"),
               controlled(1, 2, mat_rz(1.1), "crz")};
  PacketBlocks bl = packet_blocks(p);
  CHECK(max_abs_diff(blocks_unitary(p, bl), packet_unitary(p)) < 1e-12);
  SplitMix64 rng(3);
  CHECK(blocks_fit_error(p, bl, rng) < 1e-12);

  // A corrupted block must show up in the scalable check.
  bl.b[1] = mat_x();
  SplitMix64 rng2(3);
  CHECK(blocks_fit_error(p, bl, rng2) > 1e-3);
}

TEST_CASE("both packers replay to an equivalent circuit on random inputs") {
  SplitMix64 rng(2026);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform_int(5));
    Circuit c = random_circuit_small(rng, n, 24);
    for (PackingResult r : {baseline_pack(c), greedy_pack(c)}) {
      validate_packing(r);
      CHECK(equivalent(c, replay(r)));
      // Flipped diagonal joins may split one gate into two members, so the
      // member count can only grow, never shrink or double.
      std::size_t total = r.loose.size();
      for (const GatePacket& p : r.packets) total += p.members.size();
      CHECK(total >= c.gates.size());
      CHECK(total <= 2 * c.gates.size());
    }
  }
}
