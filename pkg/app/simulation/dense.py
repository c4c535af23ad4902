"""
Dense state-vector oracle.

Cross-checks the 4-valued engine by multiplying real unitaries. NCV lines are
qubits (radix 2) and v0/v1 are the complex vectors (1+i)/2 (1, -i) and
(1+i)/2 (-i, 1); NCV-|v1> lines are 4-level qudits with basis order 0, v0, 1, v1.
Controlled gates act block-diagonally: the base matrix on the trigger block,
identity elsewhere.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import List, Optional, Sequence, Tuple

import numpy as np

from app.config import settings
from app.errors import LengthMismatch, NonBooleanNcvInput, SimulationError, TooManyLines
from app.models.quantum import Library, QuantumCircuit, QuantumGate, QuantumOpKind
from app.simulation.quart import QuartState, QuartValue, control_trigger

logger = logging.getLogger(__name__)

_HALF_P = (1 + 1j) / 2
_HALF_M = (1 - 1j) / 2

_NCV_BASE = {
    QuantumOpKind.NOT: np.array([[0, 1], [1, 0]], dtype=complex),
    QuantumOpKind.V: _HALF_P * np.array([[1, -1j], [-1j, 1]], dtype=complex),
    QuantumOpKind.VDAG: _HALF_M * np.array([[1, 1j], [1j, 1]], dtype=complex),
}

# Basis order 0, v0, 1, v1
_NCV_V1_BASE = {
    QuantumOpKind.NOT: np.array(
        [[0, 0, 1, 0],
         [0, 0, 0, 1],
         [1, 0, 0, 0],
         [0, 1, 0, 0]], dtype=complex),
    QuantumOpKind.V: np.array(
        [[0, 0, 0, 1],
         [1, 0, 0, 0],
         [0, 1, 0, 0],
         [0, 0, 1, 0]], dtype=complex),
    QuantumOpKind.VDAG: np.array(
        [[0, 1, 0, 0],
         [0, 0, 1, 0],
         [0, 0, 0, 1],
         [1, 0, 0, 0]], dtype=complex),
}

_NCV_VECTORS = {
    QuartValue.ZERO: np.array([1, 0], dtype=complex),
    QuartValue.ONE: np.array([0, 1], dtype=complex),
    QuartValue.V0: _HALF_P * np.array([1, -1j], dtype=complex),
    QuartValue.V1: _HALF_P * np.array([-1j, 1], dtype=complex),
}


def dense_limit(library: Library) -> int:
    if library is Library.NCV:
        return settings.DENSE_MAX_LINES_NCV
    return settings.DENSE_MAX_LINES_NCV_V1


def basis_index(value: QuartValue, library: Library) -> int:
    """Computational basis digit of a value (Boolean only for NCV)."""
    if library is Library.NCV:
        if not value.is_boolean:
            raise NonBooleanNcvInput(f"{value.symbol} is not an NCV basis state")
        return 1 if value is QuartValue.ONE else 0
    return int(value)


def base_matrix(kind: QuantumOpKind, library: Library) -> np.ndarray:
    table = _NCV_BASE if library is Library.NCV else _NCV_V1_BASE
    return table[kind].copy()


@lru_cache(maxsize=None)
def _unitary(kind: QuantumOpKind, controlled: bool, library: Library) -> np.ndarray:
    base = base_matrix(kind, library)
    if controlled:
        r = library.radix
        trigger = basis_index(control_trigger(library), library)
        block = np.zeros((r, r), dtype=complex)
        block[trigger, trigger] = 1
        base = np.kron(block, base) + np.kron(np.eye(r) - block, np.eye(r))
    base.setflags(write=False)
    return base


def gate_unitary(gate: QuantumGate, library: Library) -> np.ndarray:
    """Matrix of a gate; for controlled gates the control is the leading factor."""
    return _unitary(gate.kind, gate.is_controlled, library).copy()


def line_vector(value: QuartValue, library: Library) -> np.ndarray:
    if library is Library.NCV:
        return _NCV_VECTORS[value].copy()
    vec = np.zeros(4, dtype=complex)
    vec[int(value)] = 1
    return vec


def quart_state_vector(state: Sequence[QuartValue], library: Library) -> np.ndarray:
    """Product-state vector of a 4-valued state, line 0 most significant."""
    return reduce(np.kron, (line_vector(QuartValue(v), library) for v in state))


@dataclass(frozen=True)
class StateVector:
    amplitudes: np.ndarray
    radix: int
    line_count: int

    def __post_init__(self):
        if self.amplitudes.shape != (self.radix ** self.line_count,):
            raise SimulationError(
                f"state vector of shape {self.amplitudes.shape} does not fit "
                f"{self.line_count} lines of radix {self.radix}"
            )
        norm = float(np.sum(np.abs(self.amplitudes) ** 2))
        if abs(norm - 1) > settings.UNITARY_TOLERANCE:
            raise SimulationError(f"state vector is not normalised (|psi|^2 = {norm!r})")

    @property
    def library(self) -> Library:
        return Library.NCV if self.radix == 2 else Library.NCV_V1

    def basis_digits(self, tol: Optional[float] = None) -> Optional[Tuple[int, ...]]:
        """Digits of the basis state carrying all amplitude, or None."""
        tol = settings.AMPLITUDE_TOLERANCE if tol is None else tol
        index = int(np.argmax(np.abs(self.amplitudes)))
        if abs(abs(self.amplitudes[index]) - 1) > tol:
            return None
        digits = np.unravel_index(index, (self.radix,) * self.line_count)
        return tuple(int(d) for d in digits)

    def basis_state(self, tol: Optional[float] = None) -> Optional[QuartState]:
        digits = self.basis_digits(tol)
        if digits is None:
            return None
        if self.radix == 2:
            return tuple(QuartValue.from_bit(d) for d in digits)
        return tuple(QuartValue(d) for d in digits)

    def matches(self, state: Sequence[QuartValue], tol: Optional[float] = None) -> bool:
        """True if this vector equals the product vector of ``state`` within ``tol``."""
        tol = settings.AMPLITUDE_TOLERANCE if tol is None else tol
        if len(state) != self.line_count:
            return False
        expected = quart_state_vector(state, self.library)
        return bool(np.allclose(self.amplitudes, expected, rtol=0, atol=tol))


def _evolve(tensor: np.ndarray, circuit: QuantumCircuit) -> np.ndarray:
    """Apply every gate to a [r]*n + [batch] tensor."""
    r = circuit.library.radix
    for gate in circuit.gates:
        u = _unitary(gate.kind, gate.is_controlled, circuit.library)
        if gate.control is None:
            tensor = np.tensordot(u, tensor, axes=([1], [gate.target]))
            tensor = np.moveaxis(tensor, 0, gate.target)
        else:
            u4 = u.reshape(r, r, r, r)
            tensor = np.tensordot(u4, tensor, axes=([2, 3], [gate.control, gate.target]))
            tensor = np.moveaxis(tensor, [0, 1], [gate.control, gate.target])
    return tensor


def simulate_dense_many(
    circuit: QuantumCircuit, inputs: Sequence[Sequence[QuartValue]]
) -> List[StateVector]:
    """Evolve several basis inputs at once; one StateVector per input."""
    library = circuit.library
    n = circuit.line_count
    r = library.radix
    limit = dense_limit(library)
    if n > limit:
        raise TooManyLines(n, limit)
    if not inputs:
        return []

    columns = np.zeros((r ** n, len(inputs)), dtype=complex)
    for col, state in enumerate(inputs):
        if len(state) != n:
            raise LengthMismatch(n, len(state))
        index = 0
        for value in state:
            index = index * r + basis_index(QuartValue(value), library)
        columns[index, col] = 1

    tensor = _evolve(columns.reshape((r,) * n + (len(inputs),)), circuit)
    final = tensor.reshape(r ** n, len(inputs))
    logger.debug(
        "simulate_dense: %d lines (radix %d), %d gates, %d inputs",
        n, r, circuit.gate_count, len(inputs),
    )
    return [StateVector(np.ascontiguousarray(final[:, c]), r, n) for c in range(len(inputs))]


def simulate_dense(circuit: QuantumCircuit, basis_input: Sequence[QuartValue]) -> StateVector:
    return simulate_dense_many(circuit, [basis_input])[0]
