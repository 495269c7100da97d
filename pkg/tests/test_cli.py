"""Command-line interface: outputs, determinism, exit codes."""
from __future__ import annotations

import json

import pytest

from steanesim.cli import main


def run(capsys, *argv) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_tables_1a_first_row(capsys):
    code, out = run(capsys, "tables", "--table", "1a")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k,x,p_th"
    assert lines[1] == "1,3,2.545392838961480e-04"
    assert len(lines) == 11


def test_tables_check_passes(capsys):
    code, _ = run(capsys, "tables", "--check")
    assert code == 0


def test_threshold_k3_row(capsys):
    code, out = run(capsys, "threshold", "--block", "data", "--k", "3")
    assert code == 0
    row = out.strip().splitlines()[1].split(",")
    assert row[0] == "3" and row[3] == "1"
    assert row[5] == "1.541452488659314e-04"


def test_threshold_json(capsys):
    code, out = run(capsys, "threshold", "--block", "aux", "--k", "1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["x_star"] == 2


def test_propagate_contains_reference_row(capsys):
    code, out = run(capsys, "propagate", "--types", "X", "--no-flags")
    assert code == 0
    rows = [r for r in out.splitlines() if "X25^C" in r and "Meas5,Meas6,Meas7=001" in r]
    assert len(rows) == 1
    assert "X7" in rows[0] and "g=000" in rows[0]
    # the first-round-copy fault surfaces separately as round disagreement
    assert any("X25^C" in r and "rounds-disagree" in r for r in out.splitlines())


def test_propagate_json_round_trips(capsys):
    code, out = run(capsys, "propagate", "--types", "Z", "--no-flags", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert any("Z9^T" in row["locations"] for row in payload)


def test_flags_report(capsys):
    code, out = run(capsys, "flags")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 8
    assert all("-> pass" in line for line in lines)


def test_depth_output(capsys):
    code, out = run(capsys, "depth", "--format", "csv")
    assert code == 0
    assert "data,r_x,9,11,11,12,14,12,12" in out
    assert "aux,R,6,8,8,8,7,6,6" in out


def test_resources_text(capsys):
    code, out = run(capsys, "resources", "--gate", "t", "--count", "1")
    assert code == 0
    assert "'transversal': 52" in out and "'t': 175" in out and "'toffoli': 436" in out
    assert "4.987500000000000e-02" in out


def test_circuit_serialization_cli(capsys):
    code, out = run(capsys, "circuit", "--no-flags")
    assert code == 0
    assert "C36 CNOT 1 6" in out


def test_outputs_are_byte_identical_across_runs(capsys):
    first = run(capsys, "tables", "--table", "2a")
    second = run(capsys, "tables", "--table", "2a")
    assert first == second
    third = run(capsys, "propagate", "--types", "X", "--no-flags")
    fourth = run(capsys, "propagate", "--types", "X", "--no-flags")
    assert third == fourth


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["threshold", "--gate", "nonsense"])
    assert exc.value.code == 2


def test_file_output(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("STEANESIM_OUTDIR", str(tmp_path))
    code, _ = run(capsys, "tables", "--table", "1b", "--out", "t1b.csv")
    assert code == 0
    text = (tmp_path / "t1b.csv").read_text()
    assert text.splitlines()[1] == "1,2,4.235493434985176e-04"


def test_verify_subcommand_fast(capsys):
    code, out = run(capsys, "verify", "--faults", "10")
    assert code == 0
    assert out.count("PASS") == 8 and "FAIL" not in out


def test_propagate_accepts_serialized_circuit(tmp_path, capsys):
    code, out = run(capsys, "circuit", "--block", "data", "--no-flags")
    assert code == 0
    path = tmp_path / "ec.txt"
    path.write_text(out)
    code, from_file = run(capsys, "propagate", "--types", "X", "--circuit", str(path))
    assert code == 0
    code, built = run(capsys, "propagate", "--types", "X", "--no-flags")
    assert from_file == built
