"""
Equivalence checking of a reversible circuit against a quantum circuit.

Every checked Boolean input must come out of the quantum circuit as the same
Boolean pattern the reversible circuit produces. Exhaustive mode partitions the
pattern space into chunks (optionally across worker processes) and stops at
the first chunk holding a counterexample.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from typing import Optional, Sequence, Tuple

import numpy as np

from app.config import settings
from app.errors import InvalidVerifyOption, LengthMismatch, TooManyLines
from app.models.circuit import ReversibleCircuit
from app.models.quantum import QuantumCircuit
from app.schemas.verification import Counterexample, VerificationResult
from app.simulation.dense import dense_limit, simulate_dense_many
from app.simulation.quart import bits_to_quart, format_quart_state, simulate_quantum
from app.simulation.reversible import (
    apply_to_pattern,
    bits_to_pattern,
    format_bits,
    pattern_to_bits,
)

logger = logging.getLogger(__name__)

_DENSE_BATCH = 256


class VerifyMode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"
    DENSE = "dense"


def _check_patterns(
    reversible: ReversibleCircuit, quantum: QuantumCircuit, patterns: Sequence[int]
) -> Tuple[int, Optional[Counterexample]]:
    """(patterns checked, first counterexample or None)."""
    n = reversible.line_count
    checked = 0
    for pattern in patterns:
        checked += 1
        bits = pattern_to_bits(pattern, n)
        expected = bits_to_quart(pattern_to_bits(apply_to_pattern(reversible, pattern), n))
        actual = simulate_quantum(quantum, bits_to_quart(bits))
        if actual != expected:
            return checked, Counterexample(
                input=format_bits(bits),
                expected=format_quart_state(expected, compact=True),
                actual=format_quart_state(actual, compact=True),
            )
    return checked, None


def _check_range(
    reversible: ReversibleCircuit, quantum: QuantumCircuit, start: int, stop: int
) -> Tuple[int, Optional[Counterexample]]:
    return _check_patterns(reversible, quantum, range(start, stop))


def _exhaustive(
    reversible: ReversibleCircuit, quantum: QuantumCircuit, workers: int
) -> Tuple[int, Optional[Counterexample]]:
    n = reversible.line_count
    if n > settings.EXHAUSTIVE_MAX_LINES:
        raise TooManyLines(n, settings.EXHAUSTIVE_MAX_LINES)

    total = 1 << n
    chunk = max(1, settings.VERIFY_CHUNK_SIZE)
    bounds = [(start, min(start + chunk, total)) for start in range(0, total, chunk)]

    checked = 0
    if workers <= 1 or len(bounds) == 1:
        for start, stop in bounds:
            count, counterexample = _check_range(reversible, quantum, start, stop)
            checked += count
            if counterexample:
                return checked, counterexample
        return checked, None

    logger.debug("exhaustive: %d chunks over %d workers", len(bounds), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_check_range, reversible, quantum, a, b) for a, b in bounds]
        # Chunks are consumed in pattern order so the reported counterexample is
        # the lowest one regardless of completion order.
        for index, future in enumerate(futures):
            count, counterexample = future.result()
            checked += count
            if counterexample:
                for pending in futures[index + 1:]:
                    pending.cancel()
                return checked, counterexample
    return checked, None


def _random(
    reversible: ReversibleCircuit, quantum: QuantumCircuit, samples: int, seed: int
) -> Tuple[int, Optional[Counterexample]]:
    rng = np.random.default_rng(seed)
    rows = rng.integers(0, 2, size=(samples, reversible.line_count))
    patterns = [bits_to_pattern(int(b) for b in row) for row in rows]
    return _check_patterns(reversible, quantum, patterns)


def _dense(
    reversible: ReversibleCircuit, quantum: QuantumCircuit
) -> Tuple[int, Optional[Counterexample]]:
    n = reversible.line_count
    limit = dense_limit(quantum.library)
    if n > limit:
        raise TooManyLines(n, limit)

    checked = 0
    for start in range(0, 1 << n, _DENSE_BATCH):
        patterns = range(start, min(start + _DENSE_BATCH, 1 << n))
        inputs = [bits_to_quart(pattern_to_bits(p, n)) for p in patterns]
        vectors = simulate_dense_many(quantum, inputs)
        for pattern, state, vector in zip(patterns, inputs, vectors):
            checked += 1
            expected = bits_to_quart(pattern_to_bits(apply_to_pattern(reversible, pattern), n))
            if not vector.matches(expected):
                label = vector.basis_state()
                return checked, Counterexample(
                    input=format_quart_state(state, compact=True),
                    expected=format_quart_state(expected, compact=True),
                    actual=format_quart_state(label, compact=True) if label else "(not a basis state)",
                )
    return checked, None


def check_equivalence(
    reversible: ReversibleCircuit,
    quantum: QuantumCircuit,
    mode: VerifyMode = VerifyMode.EXHAUSTIVE,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
) -> VerificationResult:
    """Compare the circuits on Boolean inputs; the first mismatch is reported."""
    if reversible.line_count != quantum.line_count:
        raise LengthMismatch(reversible.line_count, quantum.line_count)
    mode = VerifyMode(mode)

    used_seed = None
    if mode is VerifyMode.EXHAUSTIVE:
        checked, counterexample = _exhaustive(
            reversible, quantum, settings.VERIFY_WORKERS if workers is None else workers
        )
    elif mode is VerifyMode.RANDOM:
        samples = settings.RANDOM_SAMPLES if samples is None else samples
        if samples < 1:
            raise InvalidVerifyOption(f"sample count must be at least 1, got {samples}")
        if seed is not None and seed < 0:
            raise InvalidVerifyOption(f"seed must be non-negative, got {seed}")
        used_seed = seed if seed is not None else int(np.random.SeedSequence().entropy % (1 << 32))
        checked, counterexample = _random(reversible, quantum, samples, used_seed)
    else:
        checked, counterexample = _dense(reversible, quantum)

    result = VerificationResult(
        equivalent=counterexample is None,
        mode=mode.value,
        line_count=reversible.line_count,
        patterns_checked=checked,
        seed=used_seed,
        counterexample=counterexample,
    )
    logger.info(
        "check_equivalence: mode=%s, %d patterns, %s",
        mode.value, checked, "equivalent" if result.equivalent else "NOT equivalent",
    )
    return result
