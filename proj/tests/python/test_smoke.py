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

"""End-to-end smoke checks for the Python module. Plain asserts, no test
framework, so the suite runs anywhere the module imports."""

import json
import math

import dqcc

GHZ4 = """OPENQASM 2.0;
include "qelib1.inc";
qreg q[4];
h q[0];
cx q[0], q[1];
cx q[0], q[2];
cx q[0], q[3];
"""


def test_parse_and_pack():
    circuit, warnings = dqcc.parse_qasm(GHZ4)
    assert warnings == []
    assert circuit.n == 4
    assert len(circuit) == 4
    assert circuit.gates[0].name == "h"
    assert not circuit.gates[0].is_controlled
    assert circuit.gates[1].control == 0

    packing = dqcc.greedy_pack(circuit)
    assert len(packing.packets) == 1
    packet = packing.packets[0]
    assert packet.root == 0
    assert packet.sub_register == [0, 1, 2, 3]
    assert dqcc.equivalent(circuit, packing.replay())


def test_partition_and_cost():
    circuit, _ = dqcc.parse_qasm(GHZ4)
    packing = dqcc.greedy_pack(circuit)
    graph = dqcc.build_hypergraph(packing)
    assert graph.n == 4
    assert len(graph.edges) == 1
    assert graph.edges[0].pins == [0, 1, 2, 3]

    part = dqcc.partition(graph, k=2)
    assert sorted(set(part)) == [0, 1]
    assert dqcc.connectivity_cost(graph, part) == 1

    alloc = dqcc.allocation_from_partition(part, 2, comm_per_qpu=1)
    assert dqcc.distribution_cost(packing, alloc) == 1


def test_emit_and_verify():
    circuit, _ = dqcc.parse_qasm(GHZ4)
    packing = dqcc.greedy_pack(circuit)
    part = [0, 0, 1, 1]
    alloc = dqcc.allocation_from_partition(part, 2, comm_per_qpu=1)
    program = dqcc.emit(packing, alloc)
    assert program.epr_count == 1
    assert program.alloc.total_qubits() == 6

    outcome = dqcc.verify(circuit, program)
    assert outcome.ok
    assert outcome.max_deviation < 1e-8
    assert bool(outcome)

    doc = json.loads(program.to_json())
    assert doc["schema_version"] == 1
    assert doc["epr_count"] == 1
    assert "OPENQASM 2.0" in program.to_qasm()


def test_compile_pipeline():
    circuit = dqcc.random_circuit(8, seed=11)
    two_qubit = sum(1 for g in circuit.gates if g.is_controlled)
    assert two_qubit == 64

    report = dqcc.compile(circuit, k=2, seed=3)
    assert report.k == 2
    assert report.capacity == 5
    methods = {m.method: m for m in report.methods}
    assert set(methods) == {"baseline", "greedy"}
    assert methods["greedy"].cost <= methods["baseline"].cost
    assert len(methods["greedy"].partition) == 8

    doc = json.loads(report.to_json())
    assert doc["schema_version"] == 1
    assert {m["method"] for m in doc["methods"]} == {"baseline", "greedy"}


def test_errors():
    try:
        dqcc.parse_qasm("OPENQASM 2.0;\nbogus q[1];\n")
    except dqcc.ParseError:
        pass
    else:
        raise AssertionError("ParseError expected")

    circuit, _ = dqcc.parse_qasm(GHZ4)
    packing = dqcc.greedy_pack(circuit)
    alloc = dqcc.allocation_from_partition([0, 0, 1, 1], 2, comm_per_qpu=0)
    try:
        dqcc.emit(packing, alloc)
    except dqcc.InfeasibleError:
        pass
    else:
        raise AssertionError("InfeasibleError expected")


def test_determinism():
    a = dqcc.random_circuit(6, seed=5)
    b = dqcc.random_circuit(6, seed=5)
    assert len(a) == len(b)
    for ga, gb in zip(a.gates, b.gates):
        assert ga.name == gb.name
        assert ga.support() == gb.support()
        assert all(
            math.isclose(x, y, abs_tol=0.0) for x, y in zip(ga.params, gb.params)
        )


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} smoke tests passed, dqcc {dqcc.__version__}")


if __name__ == "__main__":
    main()
