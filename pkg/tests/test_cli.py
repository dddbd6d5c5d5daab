import json
import math

import numpy as np
import pytest

from gerstnerflow import WaveField, dispersion_speed, flow_map, LabelPoint
from gerstnerflow.cli import fmt, main, to_json


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_fmt_roundtrips_float64():
    for x in (0.1, 1 / 3, math.pi, 31.29765253614035, -1e-300, 2.5e17):
        assert float(fmt(x)) == x


def test_to_json_is_valid_and_order_preserving():
    text = to_json({"b": 1.5, "a": [True, False, 2], "s": "x"})
    assert json.loads(text) == {"b": 1.5, "a": [True, False, 2], "s": "x"}
    assert text.index('"b"') < text.index('"a"') < text.index('"s"')


def test_dispersion_output(capsys):
    code, out, _ = run_cli(capsys, "dispersion", "--k", "0.01")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("c_m_per_s=")
    assert lines[1].startswith("L_m=")
    c = float(lines[0].split("=")[1])
    assert c == dispersion_speed(0.01)
    assert float(lines[1].split("=")[1]) == pytest.approx(2 * math.pi / 0.01)


def test_dispersion_rejects_bad_wavenumber(capsys):
    code, _, err = run_cli(capsys, "dispersion", "--k", "0")
    assert code == 2
    assert "error" in err


def test_surface_csv(capsys):
    code, out, _ = run_cli(capsys, "surface", "--k", "0.01", "--r0", "-1",
                           "--s-count", "3", "--q-count", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "t,s,q,x,y,z,r0s"
    assert len(lines) == 1 + 3 * 5
    # equatorial crest row: s = 0, q = 0
    wave = WaveField.build(0.01, -1.0)
    row = [float(v) for v in lines[1 + 5 + 0].split(",")]
    assert row[1] == 0.0 and row[2] == 0.0
    assert row[5] == pytest.approx(-1.0 + math.exp(-0.01) / 0.01, rel=1e-12)
    assert row[6] == -1.0
    # s varies in the outer loop
    s_col = [float(line.split(",")[1]) for line in lines[1:]]
    assert s_col[0] == s_col[4] < 0.0 < s_col[-1]


def test_trajectory_closes_after_one_period(capsys):
    code, out, _ = run_cli(capsys, "trajectory", "--k", "0.01", "--r0", "-1",
                           "--q", "10", "--r", "-5", "--s", "0",
                           "--samples", "21")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "t,x,y,z,q,r,s"
    first = [float(v) for v in lines[1].split(",")]
    last = [float(v) for v in lines[-1].split(",")]
    # closed orbit: after one full period the particle returns exactly
    assert last[1] == pytest.approx(first[1], abs=1e-9)
    assert last[3] == pytest.approx(first[3], abs=1e-9)
    # circular orbit about the label point with radius exp(k(r - f))/k
    xs = np.array([[float(v) for v in line.split(",")] for line in lines[1:]])
    radius = math.exp(0.01 * -5.0) / 0.01
    centered = np.hypot(xs[:, 1] - 10.0, xs[:, 3] - (-5.0))
    assert np.allclose(centered, radius, rtol=1e-9)


def test_trajectory_rejects_label_above_surface(capsys):
    code, _, err = run_cli(capsys, "trajectory", "--k", "0.01", "--r0", "-1",
                           "--q", "0", "--r", "-0.5", "--s", "0")
    assert code == 2
    assert "surface" in err


def test_invert_roundtrip(capsys):
    wave = WaveField.build(0.01, -1.0)
    p = flow_map(LabelPoint(q=100.0, r=-20.0, s=5e4), 3.0, wave)
    code, out, _ = run_cli(capsys, "invert", "--k", "0.01", "--r0", "-1",
                           "--x", fmt(p.x), "--y", fmt(p.y), "--z", fmt(p.z),
                           "--t", "3")
    assert code == 0
    payload = json.loads(out)
    assert list(payload) == ["q", "r", "s", "iterations", "residual_m"]
    assert payload["q"] == pytest.approx(100.0, abs=1e-9)
    assert payload["r"] == pytest.approx(-20.0, abs=1e-9)
    assert payload["s"] == 5e4
    assert payload["residual_m"] <= 1e-12
    # iteration count respects the contraction-rate estimate
    rho = math.exp(0.01 * -1.0)  # surface contraction factor (upper bound)
    res0 = math.hypot(100.0 - p.x, -20.0 - p.z)
    cap = math.ceil(math.log(1e-12 / max(res0, 1e-12)) / math.log(rho)) + 2
    assert payload["iterations"] <= cap


def test_invert_above_surface_exit_code(capsys):
    code, _, err = run_cli(capsys, "invert", "--k", "0.01", "--r0", "-1",
                           "--x", "0", "--y", "0", "--z", "101")
    assert code == 4
    assert "surface" in err


def test_certify_json_and_determinism(capsys, tmp_path):
    args = ("certify", "--k", "0.01", "--r0", "-1", "--pairs", "2000",
            "--inversion-samples", "100")
    out_a = tmp_path / "a.json"
    out_b = tmp_path / "b.json"
    code_a = main([*args, "--out", str(out_a)])
    code_b = main([*args, "--out", str(out_b)])
    assert code_a == code_b == 0
    assert out_a.read_bytes() == out_b.read_bytes()
    payload = json.loads(out_a.read_text())
    assert list(payload) == [
        "grid", "min_jacobian_det", "max_fd_jacobian_error",
        "contraction_constant_operator", "contraction_constant_paper",
        "min_pair_ratio", "max_inversion_roundtrip_error",
        "max_det_time_variation", "max_gradient_asymmetry",
        "max_kinematic_bc_error", "boundary_checks_passed", "pass"]
    assert payload["pass"] is True
    # every float re-emits byte-identically after a parse round trip
    for key, val in payload.items():
        if isinstance(val, float):
            assert fmt(float(fmt(val))) == fmt(val)


def test_certify_fails_with_corrupted_phase_speed(capsys, tmp_path):
    wave = WaveField.build(0.01, -1.0)
    code, out, _ = run_cli(
        capsys, "certify", "--k", "0.01", "--r0", "-1",
        "--pairs", "2000", "--inversion-samples", "100",
        "--c-override", fmt(1.01 * wave.c))
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_certify_degenerate_configuration_fails(capsys):
    code, out, _ = run_cli(capsys, "certify", "--k", "0.01", "--r0", "0",
                           "--pairs", "100", "--inversion-samples", "10")
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_certify_bad_grid_spec(capsys):
    code, _, err = run_cli(capsys, "certify", "--k", "0.01", "--r0", "-1",
                           "--grid", "oops")
    assert code == 2
    assert "grid" in err


def test_out_to_unwritable_path_is_io_error(capsys, tmp_path):
    code, _, err = run_cli(capsys, "dispersion", "--k", "0.01")
    assert code == 0
    code, _, err = run_cli(capsys, "surface", "--k", "0.01", "--r0", "-1",
                           "--s-count", "2", "--q-count", "2",
                           "--out", str(tmp_path / "missing" / "f.csv"))
    assert code == 3
