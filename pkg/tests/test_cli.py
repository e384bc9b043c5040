import json
import math
import subprocess
import sys

import pytest

from qtriad.cli import main
from qtriad.dataset import DATASET_COLUMNS

BELL_ARG = "1,0,0,0,0,0,1,0"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ------------------------------------------------------------------- analyze

def test_analyze_bell_json(capsys):
    code, out, _ = run_cli(
        capsys, "analyze", "--state", BELL_ARG, "--normalize"
    )
    assert code == 0
    data = json.loads(out)
    assert data["V"] == 0.0 and data["D"] == 0.0
    assert abs(data["C"] - 1.0) < 1e-14
    assert abs(data["x"][3] + 1.0) < 1e-14
    assert data["Q"][2] == pytest.approx(-1.0, abs=1e-14)
    assert data["radius"] == 0.0
    assert "MaximallyEntangled" in data["labels"]


def test_analyze_north_pole_reports_inf(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--state", "1,0,0,0,0,0,0,0")
    assert code == 0
    data = json.loads(out)
    assert data["Q"] == "inf"
    assert data["x"] == [1.0, 0.0, 0.0, 0.0, 0.0]


def test_analyze_csv_format(capsys):
    code, out, _ = run_cli(
        capsys, "analyze", "--state", BELL_ARG, "--normalize", "--format", "csv"
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("V,D,C,x0")
    assert lines[1].split(",")[-1].startswith("MaximallyEntangled")


def test_analyze_rejects_unnormalized_without_flag(capsys):
    code, _, err = run_cli(capsys, "analyze", "--state", BELL_ARG)
    assert code == 2
    assert "error:" in err


def test_analyze_rejects_malformed_state(capsys):
    code, _, err = run_cli(capsys, "analyze", "--state", "1,0,0")
    assert code == 2
    assert "error:" in err


# --------------------------------------------------------------------- embed

def _write_chi(path, values):
    path.write_text("".join(f"{z.real},{z.imag}\n" for z in values), encoding="utf-8")


def test_embed_half_overlap(tmp_path, capsys):
    chi1 = tmp_path / "chi1.txt"
    chi2 = tmp_path / "chi2.txt"
    _write_chi(chi1, [1 + 0j, 0j])
    r = 1 / math.sqrt(2)
    _write_chi(chi2, [complex(r), complex(r)])
    code, out, _ = run_cli(
        capsys,
        "embed",
        "--mu", f"{r},0",
        "--nu", f"{r},0",
        "--chi1", str(chi1),
        "--chi2", str(chi2),
    )
    assert code == 0
    data = json.loads(out)
    alpha = [complex(re, im) for re, im in data["alpha"]]
    expected = [r, 0.0, 0.5, 0.5]
    assert all(abs(a - e) < 1e-12 for a, e in zip(alpha, expected))
    assert abs(data["analysis"]["V"] - r) < 1e-12
    assert abs(data["analysis"]["C"] - r) < 1e-12


def test_embed_higher_dimensional_partner(tmp_path, capsys):
    chi1 = tmp_path / "chi1.txt"
    chi2 = tmp_path / "chi2.txt"
    _write_chi(chi1, [1 + 0j, 0j, 0j])
    _write_chi(chi2, [0j, 0.6 + 0j, 0.8j])
    code, out, _ = run_cli(
        capsys, "embed", "--mu", "1,0", "--nu", "1,0",
        "--chi1", str(chi1), "--chi2", str(chi2),
    )
    assert code == 0
    data = json.loads(out)
    assert abs(data["analysis"]["C"] - 1.0) < 1e-12  # orthogonal chis: Bell-like


def test_embed_missing_file(tmp_path, capsys):
    chi1 = tmp_path / "chi1.txt"
    _write_chi(chi1, [1 + 0j])
    code, _, err = run_cli(
        capsys, "embed", "--mu", "1,0", "--nu", "0,0",
        "--chi1", str(chi1), "--chi2", str(tmp_path / "nope.txt"),
    )
    assert code == 2
    assert "error:" in err


# -------------------------------------------------------------------- sample

def test_sample_writes_csv(tmp_path, capsys):
    out_file = tmp_path / "haar.csv"
    code, _, _ = run_cli(
        capsys, "sample", "--ensemble", "haar", "--count", "20",
        "--seed", "9", "--out", str(out_file),
    )
    assert code == 0
    lines = out_file.read_text(encoding="utf-8").splitlines()
    assert lines[0] == ",".join(DATASET_COLUMNS)
    assert len(lines) == 21


def test_sample_json_format(tmp_path, capsys):
    out_file = tmp_path / "haar.json"
    code, _, _ = run_cli(
        capsys, "sample", "--ensemble", "haar", "--count", "5",
        "--seed", "9", "--out", str(out_file), "--format", "json",
    )
    assert code == 0
    records = json.loads(out_file.read_text(encoding="utf-8"))
    assert len(records) == 5


def test_sample_fixedc_requires_c(tmp_path, capsys):
    code, _, err = run_cli(
        capsys, "sample", "--ensemble", "fixedc", "--count", "5",
        "--seed", "9", "--out", str(tmp_path / "x.csv"),
    )
    assert code == 2
    assert "error:" in err


def test_sample_is_byte_identical_across_runs(tmp_path):
    # end-to-end determinism through the real entry point
    files = []
    for name in ("a.csv", "b.csv"):
        out_file = tmp_path / name
        proc = subprocess.run(
            [
                sys.executable, "-m", "qtriad.cli", "sample",
                "--ensemble", "haar", "--count", "200",
                "--seed", "42", "--out", str(out_file),
            ],
            capture_output=True,
        )
        assert proc.returncode == 0, proc.stderr.decode()
        files.append(out_file.read_bytes())
    assert files[0] == files[1]


# -------------------------------------------------------------------- verify

def test_verify_text_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--count", "100", "--seed", "5")
    assert code == 0
    assert "overall: pass" in out


def test_verify_json(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--count", "100", "--seed", "5", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True


def test_verify_fails_with_unreachable_tolerance(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--count", "100", "--seed", "5", "--tolerance", "1e-20"
    )
    assert code == 1
    assert "FAIL" in out


# -------------------------------------------------------------------- shells

def test_shells_dataset(tmp_path, capsys):
    out_file = tmp_path / "shells.csv"
    code, _, _ = run_cli(
        capsys, "shells", "--levels", "0,0.6,1", "--count-per-level", "30",
        "--seed", "4", "--out", str(out_file),
    )
    assert code == 0
    lines = out_file.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 91
    radius_idx = DATASET_COLUMNS.index("radius")
    radii = [float(ln.split(",")[radius_idx]) for ln in lines[1:]]
    for block, expected in zip(range(3), (1.0, 0.8, 0.0)):
        for r in radii[block * 30 : (block + 1) * 30]:
            assert abs(r - expected) < 1e-10


def test_shells_rejects_empty_levels(tmp_path, capsys):
    code, _, err = run_cli(
        capsys, "shells", "--levels", ",", "--count-per-level", "5",
        "--seed", "4", "--out", str(tmp_path / "s.csv"),
    )
    assert code == 2
    assert "error:" in err


def test_usage_error_exit_code():
    proc = subprocess.run(
        [sys.executable, "-m", "qtriad.cli", "sample", "--count", "5"],
        capture_output=True,
    )
    assert proc.returncode == 2
