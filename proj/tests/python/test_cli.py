"""CLI behaviour: output schemas, golden values, determinism, exit codes."""

import csv
import io
import json
import subprocess

import pytest


def run_cli(cli_path, *args):
    return subprocess.run(
        [cli_path, *args], capture_output=True, text=True, timeout=300
    )


def parse_csv(text):
    lines = text.splitlines()
    assert lines[0].startswith("# ptosc ")
    assert "schema=1" in lines[0]
    body = [ln for ln in lines[1:] if not ln.startswith("#")]
    return lines[0], list(csv.DictReader(io.StringIO("\n".join(body))))


def test_spectrum_golden(cli_path):
    proc = run_cli(cli_path, "spectrum", "--alpha", "0.5", "-k", "4")
    assert proc.returncode == 0
    header, rows = parse_csv(proc.stdout)
    assert "command=spectrum" in header
    got = [(r["q"], r["n"], float(r["E"])) for r in rows]
    assert got == [("1", "0", 1.0), ("-1", "0", 3.0), ("1", "1", 5.0), ("-1", "1", 7.0)]


def test_spectrum_accepts_G(cli_path):
    by_alpha = run_cli(cli_path, "spectrum", "--alpha", "1", "-k", "3")
    by_g = run_cli(cli_path, "spectrum", "--G", "0.75", "-k", "3")
    assert by_alpha.returncode == 0 and by_g.returncode == 0
    assert by_alpha.stdout == by_g.stdout


def test_alpha_and_G_are_exclusive(cli_path):
    proc = run_cli(cli_path, "spectrum", "--alpha", "1", "--G", "0.75")
    assert proc.returncode == 2
    missing = run_cli(cli_path, "spectrum")
    assert missing.returncode == 2


def test_crossings_rows(cli_path):
    proc = run_cli(cli_path, "crossings", "--alpha-max", "3", "--n-max", "1")
    assert proc.returncode == 0
    _, rows = parse_csv(proc.stdout)
    alphas = sorted({int(r["alpha"]) for r in rows})
    assert alphas == [1, 2, 3]
    first = rows[0]
    assert (first["q_upper"], first["n_upper"]) == ("1", "1")
    assert (first["q_lower"], first["n_lower"]) == ("-1", "0")
    assert float(first["E"]) == 4.0


def test_solve_free_oscillator(cli_path):
    proc = run_cli(
        cli_path, "solve", "--G", "0", "--c", "0", "-k", "3",
        "--N", "301", "--L", "8", "--quiet",
    )
    assert proc.returncode == 0
    _, rows = parse_csv(proc.stdout)
    assert len(rows) == 3
    for m, row in enumerate(rows):
        assert abs(float(row["re_lambda"]) - (2 * m + 1)) < 1e-4
        assert float(row["abs_error"]) < 1e-4
        assert abs(float(row["im_lambda"])) < 1e-8


def test_zeros_schema(cli_path):
    proc = run_cli(cli_path, "zeros", "--alpha", "0.5", "--c", "1", "-k", "3")
    assert proc.returncode == 0
    _, rows = parse_csv(proc.stdout)
    kinds = {r["kind"] for r in rows}
    assert kinds == {"z_root", "x_zero", "prefactor"}
    # every x-plane zero of every level sits at Im = c = 1 here
    for r in rows:
        if r["kind"] == "x_zero":
            assert float(r["im"]) == pytest.approx(1.0)


def test_perturb_oracle_columns(cli_path):
    proc = run_cli(
        cli_path, "perturb", "--c", "1", "-k", "2", "--basis", "12", "--quiet"
    )
    assert proc.returncode == 0
    _, rows = parse_csv(proc.stdout)
    assert len(rows) == 2
    for row in rows:
        q = int(row["q"])
        assert float(row["e1_oracle"]) == -2.0 * q
        assert float(row["e2_oracle"]) == 2.0 * q
        assert float(row["e1_error"]) < 1e-8
        assert int(row["basis"]) == 12


def test_scan_sweep(cli_path):
    proc = run_cli(
        cli_path, "scan", "--alpha-min", "0.5", "--alpha-max", "1.5",
        "--alpha-step", "0.5", "-k", "2",
    )
    assert proc.returncode == 0
    _, rows = parse_csv(proc.stdout)
    alphas = sorted({float(r["alpha"]) for r in rows})
    assert alphas == [0.5, 1.0, 1.5]
    assert len(rows) == 6


def test_json_mirror(cli_path):
    proc = run_cli(
        cli_path, "spectrum", "--alpha", "0.5", "-k", "2", "--format", "json"
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["tool"] == "ptosc"
    assert doc["schema"] == 1
    assert doc["config"]["command"] == "spectrum"
    assert doc["rows"] == [
        {"q": 1, "n": 0, "E": 1.0},
        {"q": -1, "n": 0, "E": 3.0},
    ]


def test_byte_identical_output(cli_path):
    args = ["solve", "--alpha", "0.8", "--c", "1", "-k", "3",
            "--N", "201", "--L", "7", "--quiet"]
    first = run_cli(cli_path, *args)
    second = run_cli(cli_path, *args)
    assert first.returncode == 0
    assert first.stdout == second.stdout

    sweep = ["scan", "--alpha-min", "0.2", "--alpha-max", "2.2",
             "--alpha-step", "0.04", "-k", "6", "--format", "json"]
    assert run_cli(cli_path, *sweep).stdout == run_cli(cli_path, *sweep).stdout


def test_quality_failure_exit_code(cli_path):
    # cramped box: nothing passes the eigenpair filters
    proc = run_cli(
        cli_path, "solve", "--G", "0", "--c", "0", "-k", "10",
        "--N", "64", "--L", "2.5", "--quiet",
    )
    assert proc.returncode == 3
    assert "quality" in proc.stderr


def test_output_file(cli_path, tmp_path):
    out = tmp_path / "levels.csv"
    proc = run_cli(
        cli_path, "spectrum", "--alpha", "1.5", "-k", "4", "--out", str(out)
    )
    assert proc.returncode == 0
    header, rows = parse_csv(out.read_text())
    assert [float(r["E"]) for r in rows] == [-1.0, 3.0, 5.0, 7.0]
