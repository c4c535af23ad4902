from app.models.circuit import ReversibleCircuit
from app.models.quantum import Library, QuantumCircuit
from app.mapping.ncv import MAX_NCV_CONTROLS, map_gate_ncv, map_circuit_ncv
from app.mapping.ncv_v1 import sensitize, desensitize, map_gate_v1, map_circuit_v1


def map_circuit(circuit: ReversibleCircuit, library: Library) -> QuantumCircuit:
    """Map a reversible circuit gate by gate into ``library``."""
    if library is Library.NCV:
        return map_circuit_ncv(circuit)
    return map_circuit_v1(circuit)


__all__ = [
    "MAX_NCV_CONTROLS",
    "map_gate_ncv",
    "map_circuit_ncv",
    "sensitize",
    "desensitize",
    "map_gate_v1",
    "map_circuit_v1",
    "map_circuit",
]
