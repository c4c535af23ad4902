import pytest

from app.fixtures import FIXTURE_DIR, load_fixture, load_traces
from app.models.circuit import ReversibleCircuit
from app.models.quantum import QuantumCircuit


def test_fixture_types():
    assert isinstance(load_fixture("fig1.real"), ReversibleCircuit)
    assert isinstance(load_fixture("fig3.qc"), QuantumCircuit)
    assert isinstance(load_fixture("fig4.qc"), QuantumCircuit)


def test_unknown_fixture():
    with pytest.raises(FileNotFoundError):
        load_fixture("nope.real")


def test_traces_cover_every_circuit_fixture():
    traces = load_traces()
    circuits = {path.name for path in FIXTURE_DIR.iterdir() if path.suffix in (".real", ".qc")}
    assert set(traces) == circuits
    for trace in traces.values():
        assert trace.input == "1111"
        assert trace.output == "1000"
        assert all(applied >= 1 for applied in trace.columns)
