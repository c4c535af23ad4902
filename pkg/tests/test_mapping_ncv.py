import itertools

import pytest
from hypothesis import given

from app.errors import UnsupportedControlCount
from app.mapping import MAX_NCV_CONTROLS, map_circuit, map_circuit_ncv, map_gate_ncv
from app.models.circuit import ReversibleCircuit, make_toffoli
from app.models.quantum import Library, QuantumCircuit, not_gate
from app.simulation.quart import bits_to_quart, simulate_quantum
from app.simulation.reversible import simulate_reversible
from tests.strategies import reversible_circuits


def _equivalent(reversible: ReversibleCircuit, quantum: QuantumCircuit) -> bool:
    return all(
        simulate_quantum(quantum, bits_to_quart(bits))
        == bits_to_quart(simulate_reversible(reversible, bits))
        for bits in itertools.product((0, 1), repeat=reversible.line_count)
    )


def test_not_and_cnot_map_to_single_gates():
    assert map_gate_ncv(make_toffoli([], 1)) == (not_gate(1),)
    assert map_gate_ncv(make_toffoli([0], 1)) == (not_gate(1, control=0),)


@pytest.mark.parametrize("controls, target", [((0, 1), 2), ((2, 0), 1), ((1, 2), 0)])
def test_two_control_decomposition(controls, target):
    gate = make_toffoli(controls, target)
    gates = map_gate_ncv(gate)
    assert len(gates) == 5
    assert all(g.is_controlled for g in gates)
    reversible = ReversibleCircuit(line_count=3, gates=(gate,))
    quantum = QuantumCircuit(line_count=3, library=Library.NCV, gates=gates)
    assert _equivalent(reversible, quantum)


def test_three_controls_unsupported(three_control):
    with pytest.raises(UnsupportedControlCount) as exc:
        map_circuit(three_control, Library.NCV)
    assert exc.value.control_count == 3
    assert exc.value.gate_index == 0
    assert MAX_NCV_CONTROLS == 2


def test_gate_index_reported_for_later_gates():
    circuit = ReversibleCircuit(
        line_count=5,
        gates=(make_toffoli([0], 1), make_toffoli([0, 1, 2, 3], 4)),
    )
    with pytest.raises(UnsupportedControlCount) as exc:
        map_circuit_ncv(circuit)
    assert exc.value.gate_index == 1


def test_fig1_maps_to_eight_gates(fig1):
    mapped = map_circuit(fig1, Library.NCV)
    assert mapped.library is Library.NCV
    assert mapped.gate_count == 8
    assert _equivalent(fig1, mapped)


@given(reversible_circuits(max_lines=5, max_controls=MAX_NCV_CONTROLS))
def test_mapped_circuits_are_equivalent(circuit):
    assert _equivalent(circuit, map_circuit_ncv(circuit))
