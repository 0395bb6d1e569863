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

"""Compiler for circuits split across interconnected quantum processors.

The pipeline groups gates into packets that teleport together, folds the
grouping into a weighted hypergraph, partitions it under a capacity bound,
and lowers the result to a teleportation-based distributed program whose
entanglement bill equals the partitioning objective.
"""

from dqcc._core import (
    Allocation,
    Circuit,
    CompiledMethod,
    CompileReport,
    DistributedProgram,
    Gate,
    GatePacket,
    Hyperedge,
    Hypergraph,
    InfeasibleError,
    InvariantError,
    PackingResult,
    ParseError,
    TooLargeError,
    VerifyOutcome,
    __version__,
    allocation_from_partition,
    baseline_pack,
    build_hypergraph,
    compile,
    connectivity_cost,
    distribution_cost,
    emit,
    equivalent,
    greedy_pack,
    parse_qasm,
    parse_qasm_file,
    partition,
    random_circuit,
    replay,
    verify,
)

__all__ = [
    "Allocation",
    "Circuit",
    "CompiledMethod",
    "CompileReport",
    "DistributedProgram",
    "Gate",
    "GatePacket",
    "Hyperedge",
    "Hypergraph",
    "InfeasibleError",
    "InvariantError",
    "PackingResult",
    "ParseError",
    "TooLargeError",
    "VerifyOutcome",
    "__version__",
    "allocation_from_partition",
    "baseline_pack",
    "build_hypergraph",
    "compile",
    "connectivity_cost",
    "distribution_cost",
    "emit",
    "equivalent",
    "greedy_pack",
    "parse_qasm",
    "parse_qasm_file",
    "partition",
    "random_circuit",
    "replay",
    "verify",
]
