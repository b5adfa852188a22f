import csv
import json

import numpy as np
import pytest

from mulholland.cli import main

OMEGA_SPEC = {"kind": "piecewise", "L": 0.6931471805599453,
              "slope_rule": {"type": "geometric", "limit": 2.0, "deficit": 1.0, "ratio": 0.5}}


@pytest.fixture
def specs(tmp_path):
    out = {}
    for name, obj in {"omega": OMEGA_SPEC, "square": {"kind": "power", "c": 1, "p": 2},
                      "cubic": {"kind": "power", "c": 0.25, "p": 3},
                      "sinh": {"kind": "analytic", "name": "sinh"}}.items():
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(obj))
        out[name] = str(p)
    return out


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_eval_modes(specs, capsys):
    code, out, _ = run(capsys, "eval", "--spec", specs["omega"], "--t", 4)
    assert code == 0 and float(out) == pytest.approx(22.627416997969522, rel=1e-14)
    assert len(out.strip().replace(".", "")) == 15
    assert run(capsys, "eval", "--spec", specs["omega"], "--t", 0, "--mode", "inverse")[1] \
        .strip() == "0"
    code, out, _ = run(capsys, "eval", "--spec", specs["square"], "--t", 2, "--mode", "conjugate")
    assert float(out) == pytest.approx(1.0, rel=1e-12)


def test_eval_bad_spec_exits_2(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"kind": "power",\n "c": -1, "p": 2}')
    code, _, err = run(capsys, "eval", "--spec", p, "--t", 1)
    assert code == 2 and "bad.json:2" in err and "'c'" in err


def test_check_exit_codes(specs, capsys):
    code, out, _ = run(capsys, "check", "--spec", specs["omega"], "--which", "delta2")
    assert code == 0 and out.count("PASS") == 2
    code, out, _ = run(capsys, "check", "--spec", specs["sinh"], "--which", "delta2",
                       "--t-max", 100, "--json")
    report = json.loads(out)
    assert code == 1 and report["checks"][0]["status"] == "fail"
    assert report["checks"][0]["witness"]["t"] > 0
    code, _, _ = run(capsys, "check", "--spec", specs["cubic"], "--which", "mulholland")
    assert code == 0


def test_check_delta2_constant_is_at_most_8(specs, capsys):
    _, out, _ = run(capsys, "check", "--spec", specs["omega"], "--which", "delta2", "--json")
    assert json.loads(out)["checks"][0]["observed"] <= 8.0


def test_contour(specs, tmp_path, capsys):
    out = tmp_path / "c.csv"
    assert run(capsys, "contour", "--spec", specs["cubic"], "--resolution", 4, "--out", out)[0] == 2
    assert run(capsys, "contour", "--spec", specs["cubic"], "--resolution", 16, "--out", out)[0] == 0
    with open(out) as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["theta", "s", "t", "envelope_s", "envelope_t"]
    data = np.array(rows[1:], dtype=float)
    assert len(data) == 64
    assert np.max(np.abs(data[:, 1:3] - data[:, 3:5])) <= 1e-8
    run(capsys, "contour", "--spec", specs["omega"], "--resolution", 16, "--out", out)
    data = np.loadtxt(out, delimiter=",", skiprows=1)
    r_f = np.hypot(data[:, 1], data[:, 2])
    r_e = np.hypot(data[:, 3], data[:, 4])
    assert np.all(r_f <= r_e * (1 + 1e-12))
    code, _, err = run(capsys, "contour", "--spec", specs["omega"], "--resolution", 16,
                       "--out", tmp_path / "missing" / "c.csv")
    assert code == 2 and "cannot write" in err


def test_verify_envelope_report(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "envelope", "--seed", 42, "--trials", 100)
    assert code == 0
    assert "PASS envelope.maximal_subspace_ratio(1e4)-sqrt2" in out


def test_verify_orlicz_reports_eta_residuals(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "orlicz", "--trials", 10, "--json")
    report = json.loads(out)
    assert code == 0
    assert any(c["name"] == "orlicz.eta_isometry_residual" for c in report["checks"])


def test_verify_zero_trials_warns(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "dirlimit", "--trials", 0)
    assert code == 0 and "0 trials" in out


def test_verify_is_deterministic(capsys):
    argv = ("verify", "--suite", "fnorm", "--seed", 7, "--trials", 20, "--json")
    first = json.loads(run(capsys, *argv)[1])
    second = json.loads(run(capsys, *argv)[1])
    first.pop("wall_time")
    second.pop("wall_time")
    assert json.dumps(first) == json.dumps(second)


def test_orlicz_and_dirlimit_commands(specs, tmp_path, capsys):
    m = tmp_path / "m.csv"
    m.write_text("weight,f,g\n1,1,1\n")
    code, out, _ = run(capsys, "orlicz", "--spec", specs["square"], "--measure", m)
    records = json.loads(out)
    ng = [r for r in records if r["norm"] == "ngamma"][0]
    assert code == 0 and ng["value"] == pytest.approx(2 ** 0.5, rel=1e-14)
    assert {"bracket", "iterations"} <= set(ng)
    code, out, _ = run(capsys, "dirlimit", "--seq", "3,0,0")
    assert code == 0 and float(out) == 3.0
    assert run(capsys, "dirlimit")[0] == 2
