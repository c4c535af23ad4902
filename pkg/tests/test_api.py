import pytest
from fastapi.testclient import TestClient

from app.fixtures import fixture_path
from main import app


@pytest.fixture
def client():
    return TestClient(app)


def _text(name: str) -> str:
    return fixture_path(name).read_text(encoding="utf-8")


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


def test_map(client):
    response = client.post("/api/map", json={"real": _text("fig1.real"), "library": "ncv-v1"})
    assert response.status_code == 200
    body = response.json()
    assert body["total_gates"] == 14
    assert body["controlled_gates"] == 6
    assert body["toffoli_gates"] == 4
    assert ".library ncv-v1" in body["qc"]


def test_map_unsupported_is_422(client):
    real = ".numvars 4\n.variables a b c d\n.begin\nt4 a b c d\n.end\n"
    response = client.post("/api/map", json={"real": real, "library": "ncv"})
    assert response.status_code == 422
    assert "3 controls" in response.json()["detail"]


def test_simulate_trace(client):
    response = client.post(
        "/api/simulate",
        json={"source": _text("fig4.qc"), "format": "qc", "pattern": "1111", "trace": True},
    )
    assert response.status_code == 200
    body = response.json()
    assert body["output"] == "1000"
    assert body["trace"][1] == "v1 v1 1 1"


def test_simulate_reversible(client):
    response = client.post(
        "/api/simulate", json={"source": _text("fig1.real"), "format": "real", "pattern": "1111"}
    )
    assert response.json() == {"output": "1000", "trace": []}


def test_simulate_bad_pattern_is_422(client):
    response = client.post(
        "/api/simulate", json={"source": _text("fig1.real"), "format": "real", "pattern": "11"}
    )
    assert response.status_code == 422


def test_verify(client):
    response = client.post("/api/verify", json={"real": _text("fig1.real"), "qc": _text("fig3.qc")})
    assert response.status_code == 200
    assert response.json()["equivalent"] is True


def test_costs(client):
    response = client.post("/api/costs", json={"real": _text("fig1.real")})
    assert response.status_code == 200
    body = response.json()
    assert body["ncv_total"] == 8
    assert body["delta_percent"] == 25


def test_cost_tables(client):
    body = client.get("/api/costs/tables").json()
    assert body["ncv"]["15"]["6"] == 152
    assert body["ncv_v1"]["3"] == {"cost": 5, "delta": "64%"}
