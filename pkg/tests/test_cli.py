import json

import numpy as np
import pytest

from olctkit.cli import RunConfig, config_from_dict, emit_plot_data, load_config, main
from olctkit.errors import DegenerateB, IOFailure, ParseError, SymplecticViolation, ValidationError
from olctkit.fields import read_complex_csv, read_quaternion_csv

UNIT = [1, 1, 0, 1, 0, 0]


def write_cfg(tmp_path, data, name="cfg.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data, indent=1))
    return str(path)


def test_minimal_config_defaults(tmp_path):
    cfg = load_config(write_cfg(tmp_path, {"M1": UNIT, "M2": UNIT,
                                           "signal": {"kind": "gaussian", "alpha": 1}}))
    assert cfg.grid_n == 256 and cfg.half_width == "auto"
    assert cfg.M1.as_tuple() == (1, 1, 0, 1, 0, 0)


def test_config_invariants():
    with pytest.raises(DegenerateB, match="M1"):
        config_from_dict({"M1": [1, 0, 0, 1]})
    with pytest.raises(SymplecticViolation, match="M2"):
        config_from_dict({"M2": [1, 1, 0, 0.9]})
    with pytest.raises(ParseError) as exc:
        config_from_dict({"M1": {"a": 1, "b": 1, "c": 0}})
    assert exc.value.field == "M1"
    with pytest.raises(ParseError):
        config_from_dict({"bogus": 1})
    with pytest.raises(ValidationError):
        config_from_dict({"signal": {"kind": "noise"}})
    with pytest.raises(IOFailure):
        config_from_dict({"signal": {"kind": "csv", "path": "missing.csv"}})
    assert config_from_dict({"M1": {"a": 0, "b": 2, "c": -0.5, "d": 0}}).M1.b == 2


def test_malformed_json_reports_line(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{\n "M1": [1, 1, 0, 1],\n oops\n}')
    with pytest.raises(ParseError) as exc:
        load_config(path)
    assert exc.value.line == 3


def _err_line(capsys):
    err = capsys.readouterr().err.strip().splitlines()[-1]
    assert err.startswith("error code=")
    return dict(kv.split("=", 1) for kv in err.split(" ")[1:3])


def test_exit_codes(tmp_path, capsys):
    bad = write_cfg(tmp_path, {"M1": [1, 0, 0, 1]})
    assert main(["transform", "--config", bad, "--out", str(tmp_path)]) == 1
    assert _err_line(capsys) == {"code": "DegenerateB", "exit": "1"}
    assert main(["transform", "--config", str(tmp_path / "none.json")]) == 3
    assert _err_line(capsys)["code"] == "IOFailure"
    blocker = tmp_path / "file"
    blocker.write_text("")
    assert main(["transform", "--out", str(blocker / "sub"), "--grid-n", "32"]) == 3
    assert main(["verify", "--out", str(tmp_path), "--grid-n", "32"]) == 1
    assert "verify needs" in capsys.readouterr().err


def test_quaternion_signal_on_complex_engine(tmp_path, capsys):
    cfg = write_cfg(tmp_path, {"signal": {"kind": "quaternion_gaussian"}})
    assert main(["verify", "--theorem", "young", "--domain", "olct", "--config", cfg,
                 "--out", str(tmp_path), "--grid-n", "32"]) == 1
    assert _err_line(capsys)["code"] == "ValidationError"


def test_transform_and_inverse_round_trip(tmp_path):
    cfg = write_cfg(tmp_path, {"M1": [1, 1.5, 0, 1, 0.2, 0.1],
                               "M2": [0, 0.8, -1.25, 0], "grid": {"n": 64},
                               "signal": {"kind": "gaussian", "alpha": 1.0},
                               "output": {"dir": str(tmp_path / "fwd")}})
    assert main(["inverse", "--config", cfg]) == 0
    spec = read_complex_csv(tmp_path / "fwd" / "spectrum.csv")
    back = read_complex_csv(tmp_path / "fwd" / "signal.csv")
    assert spec.grid.shape == (64, 64)
    t1, t2 = back.grid.mesh()
    np.testing.assert_allclose(back.values, np.exp(-(t1 ** 2 + t2 ** 2)), atol=1e-6)
    # feed the spectrum back through a csv-signal config
    cfg2 = write_cfg(tmp_path, {"M1": [1, 1.5, 0, 1, 0.2, 0.1], "M2": [0, 0.8, -1.25, 0],
                                "signal": {"kind": "csv", "path": "fwd/spectrum.csv"},
                                "output": {"dir": str(tmp_path / "inv")}}, "cfg2.json")
    assert main(["inverse", "--config", cfg2]) == 0
    again = read_complex_csv(tmp_path / "inv" / "signal.csv")
    np.testing.assert_allclose(again.values, back.values, atol=1e-6)


def test_quaternion_transform(tmp_path):
    cfg = write_cfg(tmp_path, {"signal": {"kind": "quaternion_gaussian"}, "grid": {"n": 32}})
    assert main(["transform", "--config", cfg, "--out", str(tmp_path)]) == 0
    F = read_quaternion_csv(tmp_path / "spectrum.csv")
    assert F.values.shape == (32, 32, 4)


def test_verify_heisenberg_summary(tmp_path, capsys):
    cfg = write_cfg(tmp_path, {"M1": [1, 1.1, 0, 1], "M2": UNIT,
                               "signal": {"kind": "gaussian", "alpha": 1.5},
                               "check": {"theorem": "heisenberg", "norm_sq": 4}})
    assert main(["verify", "--config", cfg, "--out", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "LHS=" in out and "RHS=1.21" in out and "Difference=" in out
    assert "reference-convention LHS=1.55639736" in out
    lines = (tmp_path / "report.csv").read_text().splitlines()
    assert lines[0].startswith("theorem_id,lhs,rhs") and len(lines) == 2


@pytest.mark.parametrize("theorem", ["young", "pitt", "logup", "entropy", "nazarov", "heisenberg"])
def test_verify_each_theorem(tmp_path, capsys, theorem):
    assert main(["verify", "--theorem", theorem, "--out", str(tmp_path), "--grid-n", "128"]) == 0
    assert f"theorem={theorem}" in capsys.readouterr().out


def test_verify_quaternion(tmp_path, capsys):
    assert main(["verify", "--theorem", "young_q", "--out", str(tmp_path), "--grid-n", "64"]) == 0
    assert "domain=qolct" in capsys.readouterr().out


def test_table_young_and_determinism(tmp_path):
    outs = []
    for name in ("a", "b"):
        d = tmp_path / name
        assert main(["table", "--which", "young", "--out", str(d), "--grid-n", "128"]) == 0
        outs.append([(d / f).read_bytes() for f in ("table_young.csv", "lhs.csv", "rhs.csv",
                                                   "difference.csv")])
    assert outs[0] == outs[1]
    lines = outs[0][0].decode().splitlines()
    assert lines[0] == "alpha,q,rhs,lhs,difference" and len(lines) == 16


def test_table_reference_with_svg(tmp_path):
    assert main(["table", "--which", "heisenberg", "--mode", "reference", "--svg",
                 "--out", str(tmp_path)]) == 0
    svg = (tmp_path / "heisenberg.svg").read_text()
    assert svg.lstrip().startswith("<?xml") and "<svg" in svg
    first = (tmp_path / "table_heisenberg.csv").read_text().splitlines()[1]
    assert first.split(",")[:3] == ["1.5", "1.1", "1.55639736"]


def test_emit_plot_data_empty(tmp_path):
    files = emit_plot_data("heisenberg", [], tmp_path, svg=False)
    assert [f.name for f in files] == ["lhs.csv", "rhs.csv", "difference.csv"]
    assert (tmp_path / "lhs.csv").read_text() == "alpha1,b1,lhs\n"


def test_young_plot_data_order(tmp_path):
    from olctkit.inequalities import make_table
    rows = make_table("young", {"alpha": [1.5], "second": [1.1, 1.5, 1.9]}, mode="reference")
    emit_plot_data("young", rows, tmp_path, svg=False)
    vals = [float(l.split(",")[2]) for l in (tmp_path / "difference.csv").read_text().splitlines()[1:]]
    assert vals == sorted(vals, reverse=True)


def test_selftest(capsys):
    assert main(["selftest"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out


def test_runconfig_default():
    assert RunConfig().grid_n == 256
