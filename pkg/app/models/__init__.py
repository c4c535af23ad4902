from app.models.circuit import LineId, ToffoliGate, ReversibleCircuit, make_toffoli, append_gate
from app.models.quantum import (
    QuantumOpKind,
    Library,
    QuantumGate,
    QuantumCircuit,
    not_gate,
    v_gate,
    vdag_gate,
)

__all__ = [
    # Reversible IR
    "LineId",
    "ToffoliGate",
    "ReversibleCircuit",
    "make_toffoli",
    "append_gate",
    # Quantum IR
    "QuantumOpKind",
    "Library",
    "QuantumGate",
    "QuantumCircuit",
    "not_gate",
    "v_gate",
    "vdag_gate",
]
