import logging

import pytest

from app.fixtures import fixture_path, load_fixture, load_traces
from app.models.circuit import ReversibleCircuit, make_toffoli


@pytest.fixture
def fig1():
    return load_fixture("fig1.real")


@pytest.fixture
def fig3():
    return load_fixture("fig3.qc")


@pytest.fixture
def fig4():
    return load_fixture("fig4.qc")


@pytest.fixture
def traces():
    return load_traces()


@pytest.fixture
def fixture_file():
    """Path of a shipped fixture, as a string for CLI arguments."""
    return lambda name: str(fixture_path(name))


@pytest.fixture
def three_control():
    """Single T({x1,x2,x3}, x4) gate; has no NCV decomposition here."""
    return ReversibleCircuit(line_count=4, gates=(make_toffoli([0, 1, 2], 3),))


@pytest.fixture
def three_control_real(tmp_path):
    path = tmp_path / "three_control.real"
    path.write_text(
        ".version 1.0\n.numvars 4\n.variables a b c d\n.begin\nt4 a b c d\n.end\n",
        encoding="utf-8",
    )
    return str(path)


@pytest.fixture(autouse=True)
def restore_root_logger():
    """The CLI installs a handler on the captured stderr; drop it after each test."""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)
