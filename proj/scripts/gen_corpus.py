#!/usr/bin/env python3
# Copyright 2026 The dqcc developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the bundled benchmark circuits under benchmarks/qasm/.

Every file is deterministic: angles come from a fixed-seed SplitMix64 so a
rerun reproduces the corpus byte for byte on any Python version.
"""

import math
import os

MASK = (1 << 64) - 1


class SplitMix:
    """Same stream as the C++ SplitMix64, for reproducible angles."""

    def __init__(self, seed):
        self.s = seed & MASK

    def next_u64(self):
        self.s = (self.s + 0x9E3779B97F4A7C15) & MASK
        z = self.s
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def uniform(self):
        return (self.next_u64() >> 11) * 2.0 ** -53

    def angle(self):
        return self.uniform() * 2.0 * math.pi

    def shuffled(self, items):
        items = list(items)
        for i in range(len(items) - 1, 0, -1):
            j = self.next_u64() % (i + 1)
            items[i], items[j] = items[j], items[i]
        return items


def header(n):
    return f'OPENQASM 2.0;\ninclude "qelib1.inc";\nqreg q[{n}];\n'


def ghz_chain(n):
    lines = [header(n), "h q[0];\n"]
    for i in range(n - 1):
        lines.append(f"cx q[{i}],q[{i + 1}];\n")
    return "".join(lines)


def bv(n, ones):
    # n-1 data qubits, one target; the hidden string has `ones` one bits.
    lines = [header(n)]
    for i in range(n - 1):
        lines.append(f"h q[{i}];\n")
    lines.append(f"x q[{n - 1}];\n")
    lines.append(f"h q[{n - 1}];\n")
    for i in range(ones):
        lines.append(f"cx q[{i}],q[{n - 1}];\n")
    for i in range(n - 1):
        lines.append(f"h q[{i}];\n")
    return "".join(lines)


def ising(n, seed):
    rng = SplitMix(seed)
    lines = [header(n)]
    for i in range(n):
        lines.append(f"rx({rng.angle()!r}) q[{i}];\n")
    for i in range(n - 1):
        lines.append(f"cx q[{i}],q[{i + 1}];\n")
        lines.append(f"rz({rng.angle()!r}) q[{i + 1}];\n")
        lines.append(f"cx q[{i}],q[{i + 1}];\n")
    for i in range(n):
        lines.append(f"rz({rng.angle()!r}) q[{i}];\n")
    return "".join(lines)


def knn(n, seed):
    # Amplitude encoding on the data wires, then an ancilla-controlled fan.
    rng = SplitMix(seed)
    lines = [header(n), "h q[0];\n"]
    for i in range(1, n):
        lines.append(
            f"u3({rng.angle()!r},{rng.angle()!r},{rng.angle()!r}) q[{i}];\n")
    for i in range(1, n):
        lines.append(f"cx q[0],q[{i}];\n")
    lines.append("h q[0];\n")
    return "".join(lines)


def w_state(n):
    lines = [header(n), f"x q[{n - 1}];\n"]
    for i in range(n - 2, -1, -1):
        theta = 2.0 * math.acos(math.sqrt(1.0 / (n - i)))
        lines.append(f"cu3({theta!r},0,0) q[{i + 1}],q[{i}];\n")
        lines.append(f"cx q[{i}],q[{i + 1}];\n")
    return "".join(lines)


def swap_test(pairs):
    n = 1 + 2 * pairs
    lines = [header(n), "h q[0];\n"]
    for i in range(pairs):
        lines.append(f"cswap q[0],q[{1 + i}],q[{1 + pairs + i}];\n")
    lines.append("h q[0];\n")
    return "".join(lines)


def qft(n):
    lines = [header(n)]
    for i in range(n):
        lines.append(f"h q[{i}];\n")
        for j in range(i + 1, n):
            lines.append(f"cu1(pi/2^{j - i}) q[{j}],q[{i}];\n")
    return "".join(lines)


def quantum_volume(n, layers, seed):
    rng = SplitMix(seed)
    lines = [header(n)]

    def u3(q):
        lines.append(
            f"u3({rng.angle()!r},{rng.angle()!r},{rng.angle()!r}) q[{q}];\n")

    for _ in range(layers):
        order = rng.shuffled(range(n))
        for p in range(n // 2):
            a, b = order[2 * p], order[2 * p + 1]
            for _ in range(3):
                u3(a)
                u3(b)
                lines.append(f"cx q[{a}],q[{b}];\n")
            u3(a)
            u3(b)
    return "".join(lines)


def main():
    out_dir = os.path.join(os.path.dirname(__file__), "..", "benchmarks", "qasm")
    os.makedirs(out_dir, exist_ok=True)
    files = {
        "ghz_n40.qasm": ghz_chain(40),
        "cat_state_n35.qasm": ghz_chain(35),
        "bv_n70.qasm": bv(70, ones=36),
        "ising_n34.qasm": ising(34, seed=34),
        "knn_n41.qasm": knn(41, seed=41),
        "wstate_n76.qasm": w_state(76),
        "swap_test_n25.qasm": swap_test(12),
        "swap_test_n41.qasm": swap_test(20),
        "qft_n29.qasm": qft(29),
        "qft_n63.qasm": qft(63),
        "qv_n32.qasm": quantum_volume(32, layers=32, seed=32),
    }
    for name, text in sorted(files.items()):
        path = os.path.join(out_dir, name)
        with open(path, "w") as f:
            f.write(text)
        print(f"wrote {path} ({text.count(chr(10))} lines)")


if __name__ == "__main__":
    main()
