import csv
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy import testing

from olctkit.errors import BadExponent, LambdaOutOfRange, UnsupportedProbe, ValidationError, ZeroTails
from olctkit.functionals import RectSet
from olctkit.inequalities import (PITT_EXPONENT_SIGN, TABLE_HEADERS, check_entropy, check_heisenberg,
                                  check_logup, check_nazarov, check_pitt, check_young, effect_probe,
                                  logup_constant, make_table, nazarov_constant, pitt_constant,
                                  run_sweep, write_table_csv, young_constant)
from olctkit.olct import OLCTParams

from conftest import gaussian, make_params

CELLS = ["0|0.5|0.5|0", "0|1|1|0", "1|1.1|1.5|0", "1|2|2.5|0", "1|1.5|1|0.5", "0|1.5|0.5|0"]


def _setup(key, n=256):
    a, b, alpha, tau = (float(x) for x in key.split("|"))
    M = make_params(a, b, tau)
    return gaussian(alpha, n=n), M, b * b


@pytest.mark.parametrize("key", CELLS)
def test_heisenberg_against_oracle(frozen, key):
    f, M, _ = _setup(key)
    o = frozen["gaussian"][key]
    for k in (1, 2):
        r = check_heisenberg(f, k, M, M)
        assert r.lhs == pytest.approx(o["signal_moment"] * o["spectral_moment"], rel=1e-8)
        assert r.rhs == pytest.approx(M.b ** 2 / 4)
        assert r.satisfied


@pytest.mark.parametrize("key", CELLS)
def test_entropy_against_oracle(frozen, key):
    f, M, B = _setup(key)
    o = frozen["gaussian"][key]
    r = check_entropy(f, M, M)
    assert r.extras["signal_entropy"] == pytest.approx(o["signal_entropy"], abs=1e-7)
    assert r.extras["spectral_entropy"] == pytest.approx(o["spectral_entropy"], abs=1e-7)
    assert r.lhs == pytest.approx(o["entropy_lhs"], abs=1e-7)
    assert r.rhs == pytest.approx(o["entropy_rhs"], abs=1e-12)
    assert r.extras["sharp_satisfied"]


def test_entropy_stated_bound_fails_below_unit_b(frozen):
    # with |b1 b2| < 1 the B ln B form fails once the signal is narrow enough
    o = frozen["gaussian"]["1|0.5|2.5|0"]
    assert o["entropy_lhs"] < o["entropy_rhs"]
    f, M, _ = _setup("1|0.5|2.5|0")
    r = check_entropy(f, M, M)
    assert not r.satisfied
    assert r.lhs == pytest.approx(o["entropy_lhs"], abs=1e-7)
    assert r.extras["sharp_lhs"] >= r.extras["sharp_rhs"] - 1e-9


@pytest.mark.parametrize("key", [k for k in CELLS if k.endswith("|0")])
def test_logup_against_oracle(frozen, key):
    f, M, B = _setup(key)
    o = frozen["gaussian"][key]
    r = check_logup(f, M, M)
    assert r.extras["signal_term"] == pytest.approx(o["log_signal"], abs=1e-6)
    assert r.extras["spectral_term"] == pytest.approx(o["log_spectral"], abs=1e-6)
    K0 = frozen["constants"]["logup_K0_unit"] - math.log(B)
    assert r.rhs == pytest.approx(-K0, rel=1e-12)
    assert r.satisfied


def test_logup_fourier_gaussian(frozen):
    f, M, _ = _setup("0|1|0.5|0")
    r = check_logup(f, M, M)
    assert r.lhs == pytest.approx(-frozen["constants"]["euler_gamma"], abs=1e-6)
    assert r.satisfied and not r.extras["satisfied_as_printed"]


def test_pitt_constants(frozen):
    for lam, value in frozen["pitt_constant"].items():
        assert pitt_constant(float(lam)) == pytest.approx(value, rel=1e-12)
    with pytest.raises(LambdaOutOfRange):
        pitt_constant(1.0)
    with pytest.raises(LambdaOutOfRange):
        pitt_constant(2.0)
    assert check_pitt(gaussian(1.0), 0.0, make_params(1, 1), make_params(1, 1)).satisfied


@pytest.mark.parametrize("key", ["0|0.5|0.5|0", "1|1.5|1|0", "0|2|2.5|0"])
@pytest.mark.parametrize("lam", ["0.25", "0.5", "0.75"])
def test_pitt_against_oracle(frozen, key, lam):
    f, M, B = _setup(key)
    o = frozen["gaussian"][key]
    r = check_pitt(f, float(lam), M, M)
    assert r.lhs == pytest.approx(o[f"pitt_lhs_{lam}"], rel=1e-5)
    assert r.extras["signal_integral"] == pytest.approx(o[f"pitt_signal_{lam}"], rel=1e-6)
    assert r.rhs == pytest.approx(frozen["pitt_constant"][lam] * B ** (-float(lam))
                                  * o[f"pitt_signal_{lam}"], rel=1e-6)
    assert r.satisfied


def test_pitt_exponent_sign_selection(frozen):
    assert PITT_EXPONENT_SIGN == -1
    # closed-form sweep: |B|^-lam holds everywhere, |B|^+lam breaks for small b
    plus_fails = False
    for key, o in frozen["gaussian"].items():
        if not key.endswith("|0"):
            continue
        B = float(key.split("|")[1]) ** 2
        for lam in ("0.25", "0.5", "0.75"):
            C = frozen["pitt_constant"][lam]
            lhs, t = o[f"pitt_lhs_{lam}"], o[f"pitt_signal_{lam}"]
            assert lhs <= C * B ** (-float(lam)) * t * (1 + 1e-12)
            plus_fails |= lhs > C * B ** float(lam) * t
    assert plus_fails
    r = check_pitt(gaussian(0.5), 0.5, make_params(0, 0.5), make_params(0, 0.5))
    assert r.lhs > r.extras["rhs_exponent_plus"]


def test_pitt_above_unit_lambda_is_reported_unsatisfied():
    r = check_pitt(gaussian(1.0), 1.5, make_params(1, 1), make_params(1, 1))
    assert r.extras["C_lambda"] < 0 and not r.satisfied


@pytest.mark.parametrize("key", ["1|1|0.5|1.25", "1.5|0|1.5|2", "1|1|1|1.5", "1.5|1|0.5|1.25"])
def test_young_against_oracle(frozen, key):
    alpha, a, b, p = (float(x) for x in key.split("|"))
    o = frozen["young"][key]
    M = make_params(a, b)
    r = check_young(gaussian(alpha), p, M, M)
    assert r.extras["K"] == pytest.approx(o["K"], rel=1e-12)
    assert r.lhs == pytest.approx(o["lhs"], rel=1e-7)
    assert r.rhs == pytest.approx(o["rhs"], rel=1e-7)
    assert r.satisfied


def test_young_equality_at_two():
    # Plancherel: K = 1 at p = 2 and the bound is tight
    assert young_constant(2, 3.7) == pytest.approx(1.0)
    r = check_young(gaussian(1.3), 2, make_params(1, 1.7), make_params(0, 0.6))
    assert r.lhs == pytest.approx(r.rhs, rel=1e-9) and r.satisfied


def test_young_errors_and_range():
    f, M = gaussian(1.0, n=64), make_params(1, 1)
    with pytest.raises(BadExponent):
        check_young(f, 0.5, M, M)
    assert not check_young(f, 3.0, M, M).extras["in_theorem_range"]


@given(st.floats(0.4, 3.0), st.sampled_from([0.0, 1.0, -2.0]), st.floats(0.3, 2.5),
       st.floats(1.05, 2.0), st.floats(-0.5, 0.5))
@settings(max_examples=25)
def test_young_and_heisenberg_hold(alpha, a, b, p, c):
    f = gaussian(alpha, n=128, center=(c, -c))
    M1, M2 = make_params(a, b, c, 0.1), make_params(1.0, 1.0 / b)
    assert check_young(f, p, M1, M2).satisfied
    assert check_heisenberg(f, 1, M1, M2).satisfied
    assert check_heisenberg(f, 2, M1, M2).satisfied


@pytest.mark.parametrize("b", [1.0, 1.5])
@pytest.mark.parametrize("h", [0.0, 0.5, 1.0, 2.0])
def test_nazarov_against_oracle(frozen, b, h):
    M = make_params(1, b)
    r = check_nazarov(gaussian(1.0), RectSet.square(h), RectSet.square(h), M, M)
    assert r.extras["C_star"] == pytest.approx(frozen["nazarov"][f"1|1|{b:g}|{h:g}"], rel=2e-3)
    assert r.satisfied


def test_nazarov_constant_decreases_with_set_size():
    M = make_params(0, 1)
    f = gaussian(0.5)
    cs = [check_nazarov(f, RectSet.square(h), RectSet.square(h), M, M).extras["C_star"]
          for h in (0.0, 1.0, 2.0, 3.0)]
    assert all(x > y for x, y in zip(cs, cs[1:]))


def test_nazarov_root():
    C = nazarov_constant(2.0, 0.5, 3.0)
    assert C * math.exp(3.0 * C) * 0.5 == pytest.approx(2.0, rel=1e-12)
    assert nazarov_constant(2.0, 0.5, 0.0) == pytest.approx(4.0)
    with pytest.raises(ZeroTails):
        nazarov_constant(1.0, 0.0, 1.0)


def test_heisenberg_bad_axis():
    with pytest.raises(ValidationError):
        check_heisenberg(gaussian(1.0, n=32), 3, make_params(1, 1), make_params(1, 1))


def test_logup_constant_is_pitt_slope():
    h = 1e-6
    slope = (pitt_constant(h) * 2.0 ** -h - pitt_constant(-h, strict=False) * 2.0 ** h) / (2 * h)
    assert logup_constant(2.0) == pytest.approx(slope, rel=1e-8)


# ------------------------------------------------------------------ effects

M_EFF = (make_params(1, 1.5, 0.2, 0.1), make_params(0.5, 0.8, -0.1, 0.3))


@pytest.mark.parametrize("tid,extras", [("young", {"p": 1.5}), ("entropy", {}),
                                        ("pitt", {"lam": 0.5})])
def test_effect_consistent(tid, extras):
    f = gaussian(1.0, center=(0.1, -0.2))
    for probe, alpha in (("shift", (0.5, -0.3)), ("scale", 1.3)):
        rep = effect_probe(tid, f, probe, alpha, *M_EFF, **extras)
        assert rep.consistent, (probe, rep.measured_delta, rep.predicted_delta)


def test_entropy_anisotropic_scale_delta():
    f = gaussian(1.0)
    rep = effect_probe("entropy", f, "scale", (1.4, 0.8), *M_EFF)
    B = abs(M_EFF[0].b * M_EFF[1].b)
    assert rep.predicted_delta == pytest.approx((B - 1) * math.log(1.4 * 0.8))
    assert rep.consistent


def test_heisenberg_shift_moves_origin_moments():
    f = gaussian(1.0, center=(0.1, 0.0))
    rep = effect_probe("heisenberg", f, "shift", (0.6, 0.0), *M_EFF, k=1)
    assert not rep.consistent
    assert rep.measured_delta == pytest.approx(rep.extras["exact_delta"], rel=1e-6)
    assert abs(rep.extras["centered_delta"]) < 1e-8
    assert rep.probed.satisfied


def test_unsupported_probes():
    f = gaussian(1.0, n=64)
    for tid in ("logup", "nazarov"):
        with pytest.raises(UnsupportedProbe):
            effect_probe(tid, f, "shift", 0.1, *M_EFF)
    with pytest.raises(UnsupportedProbe):
        effect_probe("pitt", f, "scale", (1.2, 0.9), *M_EFF)
    with pytest.raises(UnsupportedProbe):
        effect_probe("young", f, "rotate", 0.1, *M_EFF)


# ------------------------------------------------------------------- tables

def test_run_sweep_keeps_order():
    assert run_sweep(range(6), lambda x: x * x, threads=3) == [0, 1, 4, 9, 16, 25]


def test_make_table_rows_and_csv(tmp_path):
    rows = make_table("heisenberg", {"alpha": [1.5], "second": [1.1, 1.3]})
    assert [tuple(r) for r in rows] == [TABLE_HEADERS["heisenberg"]] * 2
    assert [r["b1"] for r in rows] == [1.1, 1.3]
    # moment product for norm 4: lhs = 16 * (1/(4 alpha)) * (a^2 + 4 alpha^2 b^2)/(4 alpha)
    for r in rows:
        D = 1 + 4 * 1.5 ** 2 * r["b1"] ** 2
        assert r["lhs"] == pytest.approx(D / 1.5 ** 2, rel=1e-8)
    path = tmp_path / "t.csv"
    write_table_csv("heisenberg", rows, path)
    with open(path) as fh:
        got = list(csv.reader(fh))
    assert tuple(got[0]) == TABLE_HEADERS["heisenberg"] and len(got) == 3


def test_make_table_edge_cases():
    assert make_table("young", {"alpha": [], "second": [1.1]}) == []
    with pytest.raises(ValidationError):
        make_table("nope")
    with pytest.raises(ValidationError):
        make_table("young", mode="guess")
    pub = make_table("young", {"alpha": [2.0], "second": [1.5]}, mode="reference")
    testing.assert_allclose(pub[0]["difference"], pub[0]["rhs"] - pub[0]["lhs"])


def test_table_default_parameters_are_symplectic():
    assert OLCTParams(1.0, 1.3, 0.0, 1.0).det() == pytest.approx(1.0)
    assert np.isfinite(make_table("young", {"alpha": [1.5], "second": [1.3]})[0]["lhs"])
