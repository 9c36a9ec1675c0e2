"""End-to-end command tests through cli.main(argv) return codes and files."""

import json
from pathlib import Path

import pytest

from unitone import cli

FAST_NLS = """\
kind = nls
alpha.variant = polynomial
alpha.coeffs = 0,-2
L = 25.132741228718345
nx = 64
dt = 0.005
t_end = 2.0
snapshot_every = 25
initial.kind = profile
initial.omega = -1.0
seed = 7
"""


def write_cfg(tmp_path, text=FAST_NLS, name="run.cfg"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_titchmarsh_verify_passes(tmp_path, capsys):
    rc = cli.main(["titchmarsh-verify", "--out", str(tmp_path), "--seed", "5"])
    assert rc == 0
    report = json.loads((tmp_path / "titchmarsh_report.json").read_text())
    assert report["trials"] == 50
    assert report["failures"] == 0
    assert report["worst_discrepancy_cells"] <= 1.0
    for chk in report["special_case_checks"]:
        assert chk["passed"], chk["name"]
    out = capsys.readouterr().out
    assert "pass" in out.lower()


def test_titchmarsh_zero_trials_vacuous(tmp_path):
    cfg = tmp_path / "t.cfg"
    cfg.write_text("trials = 0\n")
    rc = cli.main(
        ["titchmarsh-verify", "--config", str(cfg), "--out", str(tmp_path), "--seed", "1"]
    )
    assert rc == 0


def test_simulate_and_analyze_roundtrip(tmp_path, capsys):
    cfg = write_cfg(tmp_path)
    rc = cli.main(["simulate", "--config", cfg, "--out", str(tmp_path), "--json"])
    assert rc == 0
    summary = json.loads(capsys.readouterr().out)
    record = Path(summary["record"])
    assert record.exists()
    assert record.with_suffix(".invariants.json").exists()
    assert summary["invariant"] == "mass"
    assert summary["relative_drift"] < 1e-10

    rc = cli.main(["analyze", str(record), "--out", str(tmp_path), "--json"])
    assert rc == 0
    out = json.loads(capsys.readouterr().out)
    assert out["verdict"] == "SingleFrequency"
    stem = record.stem.replace(".record", "")
    report = json.loads((tmp_path / f"{stem}.report.json").read_text())
    assert report["verdict"] == "SingleFrequency"
    assert (tmp_path / f"{stem}.spectrum.csv").exists()


def test_simulate_is_reproducible(tmp_path):
    cfg = write_cfg(tmp_path)
    a, b = tmp_path / "a", tmp_path / "b"
    assert cli.main(["simulate", "--config", cfg, "--out", str(a)]) == 0
    assert cli.main(["simulate", "--config", cfg, "--out", str(b)]) == 0
    ra, rb = a / "run.record.json", b / "run.record.json"
    assert ra.read_bytes() == rb.read_bytes()


def test_simulate_gaussian_initial(tmp_path, capsys):
    text = FAST_NLS.replace("initial.kind = profile", "initial.kind = gaussian")
    text = text.replace("initial.omega = -1.0", "initial.amplitude = 1.5\ninitial.width = 2.0")
    cfg = write_cfg(tmp_path, text)
    rc = cli.main(["simulate", "--config", cfg, "--out", str(tmp_path)])
    assert rc == 0


def test_simulate_from_saved_field(tmp_path):
    # initial.kind = file replays the first column of a saved container
    cfg = write_cfg(tmp_path)
    assert cli.main(["simulate", "--config", cfg, "--out", str(tmp_path)]) == 0
    import numpy as np

    from unitone import load_record, save_field

    rec = load_record(tmp_path / "run.record.json")
    seed_field = rec.snapshots
    fp = tmp_path / "seed.field.json"
    save_field(seed_field, fp)
    text = FAST_NLS.replace("initial.kind = profile", "initial.kind = file")
    text = text.replace("initial.omega = -1.0", f"initial.file = {fp}")
    cfg2 = write_cfg(tmp_path, text, name="replay.cfg")
    assert cli.main(["simulate", "--config", cfg2, "--out", str(tmp_path)]) == 0
    rec2 = load_record(tmp_path / "replay.record.json")
    assert np.allclose(rec2.snapshots.values[:, 0], seed_field.values[:, 0])


def test_usage_errors_exit_2(tmp_path, capsys):
    assert cli.main(["simulate", "--preset", "nope", "--out", str(tmp_path)]) == 2
    assert cli.main(["simulate", "--config", str(tmp_path / "absent.cfg")]) == 2
    bad = write_cfg(tmp_path, FAST_NLS + "mystery.key = 3\n", name="bad.cfg")
    assert cli.main(["simulate", "--config", bad, "--out", str(tmp_path)]) == 2
    assert cli.main(["analyze", str(tmp_path / "no.record.json")]) == 2
    assert cli.main(["simulate", "--out", str(tmp_path)]) == 2  # no preset, no config
    assert cli.main(["demo-breather", "--omega", "1.0", "--out", str(tmp_path)]) == 2
    capsys.readouterr()


def test_config_scientific_failure_exits_1(tmp_path):
    # defocusing sign has no solitary profile: scientific failure, not usage
    text = FAST_NLS.replace("alpha.coeffs = 0,-2", "alpha.coeffs = 0,2")
    cfg = write_cfg(tmp_path, text, name="defoc.cfg")
    assert cli.main(["simulate", "--config", cfg, "--out", str(tmp_path)]) == 1


def test_check_nonlinearity_exit_codes(tmp_path, capsys):
    rc = cli.main(
        ["check-nonlinearity", "--variant", "polynomial", "--coeffs", "0,-2",
         "--n", "3", "--out", str(tmp_path), "--json"]
    )
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["admissible"] is True
    assert json.loads((tmp_path / "verdict.json").read_text())["admissible"] is True

    rc = cli.main(
        ["check-nonlinearity", "--variant", "polynomial", "--coeffs", "0,-2",
         "--n", "5", "--json"]
    )
    assert rc == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["admissible"] is False
    assert "kappa_growth_bound" in doc["failed"]

    # root variant without its order is a usage error
    rc = cli.main(["check-nonlinearity", "--variant", "root", "--coeffs", "0,1", "--n", "3"])
    assert rc == 2
    capsys.readouterr()


def test_check_nonlinearity_rational(capsys):
    rc = cli.main(
        ["check-nonlinearity", "--variant", "rational", "--num", "0,0,1",
         "--den", "1,1", "--n", "3", "--json"]
    )
    assert rc == 0
    assert json.loads(capsys.readouterr().out)["variant"] == "rational"


def test_demo_breather(tmp_path, capsys):
    rc = cli.main(["demo-breather", "--out", str(tmp_path), "--json"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["odd_ladder_decreasing"] is True
    peaks = doc["harmonic_peaks"]
    odd = [peaks["1"], peaks["3"], peaks["5"], peaks["7"]]
    assert odd[0] > odd[1] > odd[2] > odd[3]
    report = json.loads((tmp_path / "breather_harmonics.json").read_text())
    assert report["omega"] == pytest.approx(0.8)
