"""
Toffoli -> NCV-|v1> mapping by sensitizing the controls.

For controls c1 < ... < ck the controls are driven to v1 in a chain (V on c1,
then V on c(i+1) controlled by ci), the target is flipped by a NOT controlled
by ck, and the chain is undone in reverse with V-dagger. ck only reaches v1 when
every control started at 1, and no ancillary line is needed.
"""

import logging
from typing import Tuple

from app.models.circuit import ReversibleCircuit, ToffoliGate
from app.models.quantum import Library, QuantumCircuit, QuantumGate, not_gate, v_gate

logger = logging.getLogger(__name__)


def sensitize(controls: Tuple[int, ...]) -> Tuple[QuantumGate, ...]:
    """V on the first control, then each control sensitized by its predecessor."""
    if not controls:
        return ()
    chain = [v_gate(controls[0])]
    chain.extend(v_gate(nxt, control=prev) for prev, nxt in zip(controls, controls[1:]))
    return tuple(chain)


def desensitize(controls: Tuple[int, ...]) -> Tuple[QuantumGate, ...]:
    """Inverse of :func:`sensitize`: reversed order, V replaced by V-dagger."""
    return tuple(g.inverse() for g in reversed(sensitize(controls)))


def map_gate_v1(gate: ToffoliGate) -> Tuple[QuantumGate, ...]:
    if not gate.controls:
        return (not_gate(gate.target),)
    flip = not_gate(gate.target, control=gate.controls[-1])
    return (*sensitize(gate.controls), flip, *desensitize(gate.controls))


def map_circuit_v1(circuit: ReversibleCircuit) -> QuantumCircuit:
    gates = []
    for gate in circuit.gates:
        gates.extend(map_gate_v1(gate))
    mapped = QuantumCircuit(
        line_count=circuit.line_count,
        library=Library.NCV_V1,
        gates=tuple(gates),
        line_names=circuit.line_names,
    )
    logger.info(
        "map_circuit_v1: %d Toffoli gates -> %d gates (%d controlled) on %d lines",
        circuit.gate_count, mapped.gate_count, mapped.controlled_count, circuit.line_count,
    )
    return mapped
