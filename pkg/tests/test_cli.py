import json

import pytest

from app.cli import EXIT_ERROR, EXIT_INEQUIVALENT, EXIT_OK, main
from app.ingestion import load_quantum, write_qc
from app.models.quantum import Library


def test_map_to_file(fixture_file, tmp_path, capsys):
    out = tmp_path / "fig1.qc"
    assert main(["map", fixture_file("fig1.real"), "--lib", "ncv-v1", "-o", str(out)]) == EXIT_OK
    mapped = load_quantum(out)
    assert mapped.library is Library.NCV_V1
    assert mapped.gate_count == 14
    assert "(6 controlled)" in capsys.readouterr().out


def test_map_to_stdout(fixture_file, capsys):
    assert main(["map", fixture_file("fig1.real"), "--lib", "ncv"]) == EXIT_OK
    captured = capsys.readouterr()
    assert captured.out.startswith(".version 1.0\n.library ncv\n")
    assert captured.out.count("\n") == 5 + 8 + 1
    assert "8 NCV gates" in captured.err


def test_map_three_controls_to_ncv_fails(three_control_real, capsys):
    assert main(["map", three_control_real, "--lib", "ncv"]) == EXIT_ERROR
    assert "UnsupportedControlCount" in capsys.readouterr().err


def test_sim_reversible(fixture_file, capsys):
    assert main(["sim", fixture_file("fig1.real"), "1111"]) == EXIT_OK
    assert capsys.readouterr().out == "1000\n"


def test_sim_trace(fixture_file, capsys):
    assert main(["sim", fixture_file("fig4.qc"), "1111", "--trace"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[1] == "after gate 2: v1 v1 1 1"
    assert lines[-1] == "1000"
    assert len(lines) == 10


def test_sim_length_mismatch(fixture_file, capsys):
    assert main(["sim", fixture_file("fig1.real"), "11"]) == EXIT_ERROR
    assert "LengthMismatch" in capsys.readouterr().err


def test_sim_unknown_suffix(tmp_path, capsys):
    path = tmp_path / "circuit.txt"
    path.write_text("", encoding="utf-8")
    assert main(["sim", str(path), "1"]) == EXIT_ERROR


def test_sim_missing_file(tmp_path, capsys):
    assert main(["sim", str(tmp_path / "missing.real"), "1"]) == EXIT_ERROR
    assert capsys.readouterr().err.startswith("error:")


def test_verify_equivalent(fixture_file, capsys):
    code = main(["verify", fixture_file("fig1.real"), fixture_file("fig4.qc")])
    assert code == EXIT_OK
    assert capsys.readouterr().out.startswith("EQUIVALENT")


def test_verify_counterexample(fixture_file, fig4, tmp_path, capsys):
    broken = fig4.model_copy(update={"gates": fig4.gates[:4] + fig4.gates[5:]})
    path = tmp_path / "broken.qc"
    path.write_text(write_qc(broken), encoding="utf-8")
    assert main(["verify", fixture_file("fig1.real"), str(path)]) == EXIT_INEQUIVALENT
    out = capsys.readouterr().out
    assert out.startswith("NOT EQUIVALENT")
    assert "input:" in out


def test_verify_random_prints_seed(fixture_file, capsys):
    code = main([
        "verify", fixture_file("fig1.real"), fixture_file("fig3.qc"),
        "--mode", "random", "--samples", "20", "--seed", "5",
    ])
    assert code == EXIT_OK
    assert "seed: 5" in capsys.readouterr().out


@pytest.mark.parametrize("samples", ["0", "-1"])
def test_verify_rejects_non_positive_samples(fixture_file, capsys, samples):
    code = main([
        "verify", fixture_file("fig1.real"), fixture_file("fig3.qc"),
        "--mode", "random", "--samples", samples,
    ])
    assert code == EXIT_ERROR
    captured = capsys.readouterr()
    assert "EQUIVALENT" not in captured.out
    assert "error: InvalidVerifyOption" in captured.err


def test_cost_rows(fixture_file, capsys):
    assert main(["cost", fixture_file("fig1.real")]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[1] == "0 | 2 | 5 | 3 | 40%"
    assert lines[-1] == "total | | 8 | 6 | 25%"


def test_cost_with_ancillae(tmp_path, capsys):
    path = tmp_path / "wide.real"
    names = " ".join(f"x{i}" for i in range(1, 10))
    path.write_text(
        f".numvars 9\n.variables {names}\n.begin\n"
        "t4 x1 x2 x3 x9\nt8 x1 x2 x3 x4 x5 x6 x7 x9\nt1 x1\n.end\n",
        encoding="utf-8",
    )
    assert main(["cost", str(path), "--ancillae", "2"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[1:4] == ["0 | 3 | 14 | 5 | 64%", "1 | 7 | 56 | 13 | 77%", "2 | 0 | 1 | 1 | 0%"]


def test_cost_out_of_range_is_not_fatal(tmp_path, capsys):
    names = [f"x{i}" for i in range(1, 18)]
    path = tmp_path / "huge.real"
    path.write_text(
        f".numvars 17\n.variables {' '.join(names)}\n.begin\nt17 {' '.join(names)}\n.end\n",
        encoding="utf-8",
    )
    assert main(["cost", str(path)]) == EXIT_OK
    captured = capsys.readouterr()
    assert "n/a" in captured.out.splitlines()[1]
    assert "warning" in captured.err


def test_cost_json(fixture_file, capsys):
    assert main(["cost", fixture_file("fig1.real"), "--format", "json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["ncv_total"] == 8
    assert len(payload["rows"]) == 4


@pytest.mark.parametrize("fmt", ["text", "csv", "json"])
def test_tables(fmt, capsys):
    assert main(["tables", "--format", fmt]) == EXIT_OK
    out = capsys.readouterr().out
    assert "152" in out
    if fmt == "json":
        payload = json.loads(out)
        assert payload["ncv"]["7"]["2"] == 56
        assert payload["ncv"]["3"]["2"] is None
        assert payload["ncv_v1"]["7"]["delta"] == "77-80%"
