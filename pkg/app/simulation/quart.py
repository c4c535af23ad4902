"""
Restricted 4-valued simulation over {0, v0, 1, v1}.

The integer value of each QuartValue is its position in the qudit basis order
(0, v0, 1, v1), so every operation is a rotation mod 4: V = +1, V-dagger = -1,
NOT = +2. The same transition table holds for NCV qubits with Boolean controls.
"""

import logging
import re
from enum import IntEnum
from typing import Iterator, List, Sequence, Tuple

from app.errors import InvalidNcvControl, InvalidSymbol, LengthMismatch
from app.models.quantum import Library, QuantumCircuit, QuantumOpKind

logger = logging.getLogger(__name__)


class QuartValue(IntEnum):
    ZERO = 0
    V0 = 1
    ONE = 2
    V1 = 3

    @property
    def is_boolean(self) -> bool:
        return self in (QuartValue.ZERO, QuartValue.ONE)

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @classmethod
    def from_bit(cls, bit: int) -> "QuartValue":
        return cls.ONE if bit else cls.ZERO


_SYMBOLS = {
    QuartValue.ZERO: "0",
    QuartValue.V0: "v0",
    QuartValue.ONE: "1",
    QuartValue.V1: "v1",
}
_BY_SYMBOL = {s: v for v, s in _SYMBOLS.items()}

QuartState = Tuple[QuartValue, ...]

_SHIFT = {
    QuantumOpKind.V: 1,
    QuantumOpKind.NOT: 2,
    QuantumOpKind.VDAG: 3,
}

TRIGGER = {
    Library.NCV: QuartValue.ONE,
    Library.NCV_V1: QuartValue.V1,
}


def control_trigger(library: Library) -> QuartValue:
    """Control value that fires a controlled gate: 1 for NCV, v1 for NCV-|v1>."""
    return TRIGGER[library]


def step_quart(value: QuartValue, kind: QuantumOpKind) -> QuartValue:
    return QuartValue((value + _SHIFT[kind]) % 4)


def _as_value(value) -> QuartValue:
    # Plain ints/bools are refused: True would silently become V0.
    if isinstance(value, QuartValue):
        return value
    if isinstance(value, str) and value.lower() in _BY_SYMBOL:
        return _BY_SYMBOL[value.lower()]
    raise InvalidSymbol(f"not a 4-valued symbol: {value!r}")


def _as_state(values: Sequence, line_count: int) -> List[QuartValue]:
    if len(values) != line_count:
        raise LengthMismatch(line_count, len(values))
    return [_as_value(v) for v in values]


def iter_quantum_states(circuit: QuantumCircuit, state: Sequence) -> Iterator[QuartState]:
    """Yield the 4-valued state after each gate, in cascade order."""
    values = _as_state(state, circuit.line_count)
    library = circuit.library
    trigger = TRIGGER[library]

    for index, gate in enumerate(circuit.gates):
        if gate.control is not None:
            control = values[gate.control]
            if library is Library.NCV and not control.is_boolean:
                raise InvalidNcvControl(index, gate.control, control.symbol)
            if control != trigger:
                yield tuple(values)
                continue
        values[gate.target] = step_quart(values[gate.target], gate.kind)
        yield tuple(values)


def simulate_quantum(circuit: QuantumCircuit, state: Sequence) -> QuartState:
    result = tuple(_as_state(state, circuit.line_count))
    for result in iter_quantum_states(circuit, result):
        pass
    return result


def trace_quantum(circuit: QuantumCircuit, state: Sequence) -> List[QuartState]:
    """States after gate 1, 2, ..., d (input not included)."""
    return list(iter_quantum_states(circuit, state))


# ── Pattern codecs ─────────────────────────────────────────────────────

_TOKEN_RE = re.compile(r"v0|v1|0|1", re.IGNORECASE)


def parse_quart_pattern(text: str) -> QuartState:
    """Parse "1111", "v1 v1 1 1", "v1,v1,1,1" or "v1v111" into a state."""
    compact = re.sub(r"[\s,]+", "", text)
    values = []
    pos = 0
    while pos < len(compact):
        match = _TOKEN_RE.match(compact, pos)
        if not match:
            raise InvalidSymbol(f"invalid symbol at position {pos + 1} in {text!r}")
        values.append(_BY_SYMBOL[match.group(0).lower()])
        pos = match.end()
    if not values:
        raise InvalidSymbol("empty pattern")
    return tuple(values)


def format_quart_state(state: Sequence[QuartValue], compact: bool = False) -> str:
    """Space separated symbols; ``compact`` joins all-Boolean states as "1000"."""
    if compact and all(QuartValue(v).is_boolean for v in state):
        return "".join(QuartValue(v).symbol for v in state)
    return " ".join(QuartValue(v).symbol for v in state)


def is_boolean_state(state: Sequence[QuartValue]) -> bool:
    return all(QuartValue(v).is_boolean for v in state)


def bits_to_quart(bits: Sequence[int]) -> QuartState:
    return tuple(QuartValue.from_bit(b) for b in bits)
