import itertools

import pytest
from hypothesis import given

from app.mapping import desensitize, map_circuit, map_circuit_v1, map_gate_v1, sensitize
from app.models.circuit import ReversibleCircuit, make_toffoli
from app.models.quantum import Library, QuantumCircuit, not_gate, v_gate, vdag_gate
from app.simulation.quart import QuartValue, bits_to_quart, simulate_quantum
from app.simulation.reversible import simulate_reversible
from tests.strategies import reversible_circuits


def _as_circuit(gates, line_count):
    return QuantumCircuit(line_count=line_count, library=Library.NCV_V1, gates=tuple(gates))


def test_not_gate_maps_to_not():
    assert map_gate_v1(make_toffoli([], 2)) == (not_gate(2),)


def test_two_control_cascade_structure():
    gates = map_gate_v1(make_toffoli([0, 1], 3))
    assert gates == (
        v_gate(0),
        v_gate(1, control=0),
        not_gate(3, control=1),
        vdag_gate(1, control=0),
        vdag_gate(0),
    )


def test_desensitize_is_inverse_of_sensitize():
    controls = (0, 2, 3, 5)
    forward = sensitize(controls)
    assert desensitize(controls) == tuple(g.inverse() for g in reversed(forward))
    assert sensitize(()) == ()


@pytest.mark.parametrize("k", range(0, 11))
def test_gate_counts(k):
    gates = map_gate_v1(make_toffoli(range(k), k))
    assert len(gates) == (1 if k == 0 else 2 * k + 1)
    assert sum(g.is_controlled for g in gates) == (0 if k == 0 else 2 * k - 1)


@pytest.mark.parametrize("k", range(0, 11))
def test_cascade_realises_toffoli_on_every_boolean_input(k):
    gate = make_toffoli(range(k), k)
    n = k + 1
    reversible = ReversibleCircuit(line_count=n, gates=(gate,))
    quantum = _as_circuit(map_gate_v1(gate), n)
    for bits in itertools.product((0, 1), repeat=n):
        expected = simulate_reversible(reversible, bits)
        assert simulate_quantum(quantum, bits_to_quart(bits)) == bits_to_quart(expected)


@pytest.mark.parametrize("k", range(1, 7))
def test_last_control_reaches_v1_only_when_all_controls_are_one(k):
    controls = tuple(range(k))
    sensitized = _as_circuit(sensitize(controls), k)
    for bits in itertools.product((0, 1), repeat=k):
        state = simulate_quantum(sensitized, bits_to_quart(bits))
        assert (state[-1] is QuartValue.V1) == all(bits)


def test_fig1_maps_to_fourteen_gates(fig1):
    mapped = map_circuit(fig1, Library.NCV_V1)
    assert mapped.library is Library.NCV_V1
    assert mapped.gate_count == 14
    assert mapped.controlled_count == 6
    assert mapped.names() == fig1.names()


def test_fig1_mapping_is_equivalent(fig1):
    mapped = map_circuit_v1(fig1)
    for bits in itertools.product((0, 1), repeat=4):
        assert simulate_quantum(mapped, bits_to_quart(bits)) == bits_to_quart(
            simulate_reversible(fig1, bits)
        )


@given(reversible_circuits(max_lines=5))
def test_mapped_circuits_are_equivalent(circuit):
    mapped = map_circuit_v1(circuit)
    for bits in itertools.product((0, 1), repeat=circuit.line_count):
        assert simulate_quantum(mapped, bits_to_quart(bits)) == bits_to_quart(
            simulate_reversible(circuit, bits)
        )
