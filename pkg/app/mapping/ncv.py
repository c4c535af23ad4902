"""
Toffoli -> NCV mapping for gates with at most two controls.

Larger gates are only costed (see app.services.cost_model); their NCV
constructions are not generated here.
"""

import logging
from typing import Tuple

from app.errors import UnsupportedControlCount
from app.models.circuit import ReversibleCircuit, ToffoliGate
from app.models.quantum import Library, QuantumCircuit, QuantumGate, not_gate, v_gate, vdag_gate

logger = logging.getLogger(__name__)

MAX_NCV_CONTROLS = 2


def map_gate_ncv(gate: ToffoliGate) -> Tuple[QuantumGate, ...]:
    t = gate.target
    if gate.k == 0:
        return (not_gate(t),)
    if gate.k == 1:
        return (not_gate(t, control=gate.controls[0]),)
    if gate.k == 2:
        # c1 is the outer control; the target accumulates V^(c2) V†^(c1^c2) V^(c1) = V^(2 c1 c2).
        c1, c2 = gate.controls
        return (
            v_gate(t, control=c2),
            not_gate(c2, control=c1),
            vdag_gate(t, control=c2),
            not_gate(c2, control=c1),
            v_gate(t, control=c1),
        )
    raise UnsupportedControlCount(gate.k)


def map_circuit_ncv(circuit: ReversibleCircuit) -> QuantumCircuit:
    gates = []
    for index, gate in enumerate(circuit.gates):
        if gate.k > MAX_NCV_CONTROLS:
            raise UnsupportedControlCount(gate.k, gate_index=index)
        gates.extend(map_gate_ncv(gate))
    mapped = QuantumCircuit(
        line_count=circuit.line_count,
        library=Library.NCV,
        gates=tuple(gates),
        line_names=circuit.line_names,
    )
    logger.info(
        "map_circuit_ncv: %d Toffoli gates -> %d gates on %d lines",
        circuit.gate_count, mapped.gate_count, circuit.line_count,
    )
    return mapped
