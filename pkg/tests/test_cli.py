import os
import subprocess
import sys

import pytest

from qsu2.cli import main


def run_cli(args, tmp_path):
    return main(["--output", str(tmp_path)] + args)


def test_orthogonality_passes(tmp_path):
    assert run_cli(["--q", "7/10", "--lmax", "3/2", "orthogonality"],
                   tmp_path) == 0


def test_hopf_passes(tmp_path):
    assert run_cli(["--trials", "25", "hopf"], tmp_path) == 0


def test_fourier_passes(tmp_path):
    assert run_cli(["--trials", "15", "fourier"], tmp_path) == 0


def test_inequality_writes_csv(tmp_path):
    rc = run_cli(["--q", "1", "--p", "1.5", "--trials", "3", "--grid", "24",
                  "--seed", "42", "inequality", "--kind", "hy"], tmp_path)
    assert rc == 0
    assert (tmp_path / "inequality_hy.csv").exists()


def test_inequality_deterministic(tmp_path):
    args = ["--q", "1", "--p", "1.5", "--trials", "3", "--grid", "24",
            "--seed", "7", "inequality", "--kind", "paley"]
    d1, d2 = tmp_path / "one", tmp_path / "two"
    d1.mkdir(), d2.mkdir()
    main(["--output", str(d1)] + args)
    main(["--output", str(d2)] + args)
    assert (d1 / "inequality_paley.csv").read_bytes() == \
        (d2 / "inequality_paley.csv").read_bytes()


def test_multiplier_modes(tmp_path):
    assert run_cli(["--lmax", "1", "multiplier", "--extract"], tmp_path) == 0
    assert run_cli(["--lmax", "1", "multiplier", "--bound"], tmp_path) == 0
    assert (tmp_path / "multiplier_symbol.json").exists()


def test_spectrum_classify(tmp_path):
    assert run_cli(["--q", "1/2", "spectrum", "--dirac", "q", "--classify"],
                   tmp_path) == 0
    assert run_cli(["--q", "1", "spectrum", "--dirac", "classical",
                    "--classify"], tmp_path) == 0


def test_commutator_scan(tmp_path):
    rc = run_cli(["--q", "1/2", "--lmax", "1", "commutator", "--scan"],
                 tmp_path)
    assert rc == 0
    assert (tmp_path / "commutator_ratios.csv").exists()


def test_calculus_checks(tmp_path):
    assert run_cli(["--q", "1/2", "--lmax", "2", "--trials", "5",
                    "calculus", "--kind", "3d", "--check", "leibniz"],
                   tmp_path) == 0
    assert run_cli(["--q", "1/2", "--lmax", "4", "calculus", "--kind", "3d",
                    "--check", "admissible"], tmp_path) == 0
    assert (tmp_path / "growth_3d.csv").exists()


def test_dirac_and_laplacian(tmp_path):
    assert run_cli(["--q", "1/2", "--lmax", "3/2", "dirac-geometric",
                    "--eigenvalues"], tmp_path) == 0
    assert run_cli(["--q", "1/2", "--lmax", "2", "laplacian",
                    "--eigenvalues"], tmp_path) == 0


def test_float_q_accepted_with_note(tmp_path, capsys):
    rc = run_cli(["--q", "0.7", "--lmax", "1", "orthogonality"], tmp_path)
    assert rc == 0


def test_config_file_override(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{"lmax": 2, "trials": 5}')
    assert main(["--output", str(tmp_path), "--config", str(cfg),
                 "hopf"]) == 0


def test_console_entry_point(tmp_path):
    env = dict(os.environ, QSU2_OUTPUT_DIR=str(tmp_path))
    proc = subprocess.run(
        [sys.executable, "-m", "qsu2.cli", "--lmax", "1", "orthogonality"],
        capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    assert "PASS" in proc.stdout
