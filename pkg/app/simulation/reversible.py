"""Boolean simulation of Toffoli cascades.

Patterns are integers with line 0 (x1) as the most significant bit, so the
pattern written "1000" for four lines is the integer 8.
"""

import logging
from typing import List, Sequence, Tuple

import numpy as np

from app.config import settings
from app.errors import InvalidSymbol, LengthMismatch, NotReversible, TooManyLines
from app.models.circuit import ReversibleCircuit

logger = logging.getLogger(__name__)

Bits = Tuple[int, ...]


def pattern_to_bits(pattern: int, line_count: int) -> Bits:
    return tuple((pattern >> (line_count - 1 - i)) & 1 for i in range(line_count))


def bits_to_pattern(bits: Sequence[int]) -> int:
    pattern = 0
    for bit in bits:
        pattern = (pattern << 1) | bit
    return pattern


def parse_bits(text: str) -> Bits:
    """Parse "1111" or "1 1 1 1" into bits."""
    compact = "".join(text.replace(",", " ").split())
    if not compact or any(ch not in "01" for ch in compact):
        raise InvalidSymbol(f"expected a 0/1 pattern, got {text!r}")
    return tuple(int(ch) for ch in compact)


def format_bits(bits: Sequence[int]) -> str:
    return "".join(str(b) for b in bits)


def _check_input(circuit: ReversibleCircuit, bits: Sequence) -> Bits:
    if len(bits) != circuit.line_count:
        raise LengthMismatch(circuit.line_count, len(bits))
    checked = []
    for bit in bits:
        if bit not in (0, 1):
            raise InvalidSymbol(f"not a Boolean value: {bit!r}")
        checked.append(int(bit))
    return tuple(checked)


def apply_to_pattern(circuit: ReversibleCircuit, pattern: int) -> int:
    n = circuit.line_count
    for gate in circuit.gates:
        cmask, tmask = gate.masks(n)
        if pattern & cmask == cmask:
            pattern ^= tmask
    return pattern


def simulate_reversible(circuit: ReversibleCircuit, bits: Sequence[int]) -> Bits:
    pattern = bits_to_pattern(_check_input(circuit, bits))
    return pattern_to_bits(apply_to_pattern(circuit, pattern), circuit.line_count)


def trace_reversible(circuit: ReversibleCircuit, bits: Sequence[int]) -> List[Bits]:
    """Boolean state after each gate (input not included)."""
    n = circuit.line_count
    pattern = bits_to_pattern(_check_input(circuit, bits))
    states = []
    for gate in circuit.gates:
        cmask, tmask = gate.masks(n)
        if pattern & cmask == cmask:
            pattern ^= tmask
        states.append(pattern_to_bits(pattern, n))
    return states


def truth_table(circuit: ReversibleCircuit, max_lines: int | None = None) -> np.ndarray:
    """Output pattern for every input pattern 0 .. 2^n - 1, checked to be a bijection."""
    limit = settings.EXHAUSTIVE_MAX_LINES if max_lines is None else max_lines
    n = circuit.line_count
    if n > limit:
        raise TooManyLines(n, limit)

    table = np.arange(1 << n, dtype=np.int64)
    for gate in circuit.gates:
        cmask, tmask = gate.masks(n)
        fired = (table & cmask) == cmask
        table[fired] ^= tmask

    if np.unique(table).size != table.size:
        raise NotReversible("truth table is not a permutation")
    logger.debug("truth_table: %d lines, %d gates", n, circuit.gate_count)
    return table
