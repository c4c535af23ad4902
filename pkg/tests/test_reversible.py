import numpy as np
import pytest
from hypothesis import given

from app.errors import InvalidSymbol, LengthMismatch, TooManyLines
from app.models.circuit import ReversibleCircuit, make_toffoli
from app.simulation.reversible import (
    apply_to_pattern,
    bits_to_pattern,
    format_bits,
    parse_bits,
    pattern_to_bits,
    simulate_reversible,
    trace_reversible,
    truth_table,
)
from tests.strategies import reversible_circuits


def test_fig1_maps_1111_to_1000(fig1):
    assert simulate_reversible(fig1, (1, 1, 1, 1)) == (1, 0, 0, 0)


def test_fig1_trace_matches_annotations(fig1, traces):
    trace = trace_reversible(fig1, parse_bits(traces["fig1.real"].input))
    assert len(trace) == fig1.gate_count
    for applied, expected in traces["fig1.real"].columns.items():
        assert trace[applied - 1] == parse_bits(expected)
    assert format_bits(trace[-1]) == traces["fig1.real"].output


def test_single_toffoli_truth_table():
    circuit = ReversibleCircuit(line_count=3, gates=(make_toffoli([0, 1], 2),))
    table = truth_table(circuit)
    # only 110 and 111 swap
    assert list(table) == [0, 1, 2, 3, 4, 5, 7, 6]


def test_empty_circuit_is_identity():
    circuit = ReversibleCircuit(line_count=3)
    assert list(truth_table(circuit)) == list(range(8))
    assert simulate_reversible(circuit, (0, 1, 1)) == (0, 1, 1)


def test_length_mismatch(fig1):
    with pytest.raises(LengthMismatch) as exc:
        simulate_reversible(fig1, (1, 1))
    assert exc.value.expected == 4
    assert exc.value.actual == 2


def test_non_boolean_input_rejected(fig1):
    with pytest.raises(InvalidSymbol):
        simulate_reversible(fig1, (1, 2, 0, 0))


def test_truth_table_line_limit():
    circuit = ReversibleCircuit(line_count=5)
    with pytest.raises(TooManyLines):
        truth_table(circuit, max_lines=4)


def test_pattern_codecs():
    assert pattern_to_bits(0b1000, 4) == (1, 0, 0, 0)
    assert bits_to_pattern((0, 0, 1, 1)) == 3
    assert parse_bits("1 0 1") == (1, 0, 1)
    with pytest.raises(InvalidSymbol):
        parse_bits("12")
    with pytest.raises(InvalidSymbol):
        parse_bits("")


@given(reversible_circuits())
def test_truth_table_is_a_permutation(circuit):
    table = truth_table(circuit)
    assert sorted(table.tolist()) == list(range(1 << circuit.line_count))


@given(reversible_circuits())
def test_inverse_circuit_inverts_truth_table(circuit):
    table = truth_table(circuit)
    inverse = truth_table(circuit.inverse())
    np.testing.assert_array_equal(inverse[table], np.arange(1 << circuit.line_count))


@given(reversible_circuits(max_lines=4))
def test_vectorised_table_agrees_with_pattern_simulation(circuit):
    table = truth_table(circuit)
    for pattern in range(1 << circuit.line_count):
        assert table[pattern] == apply_to_pattern(circuit, pattern)
