"""Invariant suite behind ``olctkit selftest``.

Only invariants that hold mathematically are run here; each prints one
``PASS``/``FAIL`` line with the measured quantity.
"""
from __future__ import annotations

import sys
import time

import numpy as np

from .fields import Grid2D
from .functionals import RectSet
from .gaussian import GaussianSpec, closed_on_grid, default_grid, gaussian_field
from .inequalities import (check_entropy, check_heisenberg, check_logup, check_nazarov,
                           check_pitt, check_young, effect_probe, logup_constant, pitt_factor)
from .olct import FOURIER, OLCTParams, induced_grid, inverse_olct_2d, olct_2d_direct, olct_2d_fft
from .qolct import (check_q_identities, check_q_inequality, inverse_qolct, qolct_direct,
                    qolct_via_ops, qolct_via_qft, quaternion_gaussian)
from .quaternion import i_times, ops_split, q_conj, q_mul, q_norm_sq, times_j


def _rel(a, b):
    return float(np.max(np.abs(a - b)) / np.max(np.abs(b)))


def _params(a, b, tau=0.0, eta=0.0):
    if a == 0:
        return OLCTParams(0.0, b, -1.0 / b, 0.0, tau, eta)
    return OLCTParams(a, b, 0.0, 1.0 / a, tau, eta)


def _checks(n, seed):
    rng = np.random.default_rng(seed)
    p, q, r = (rng.normal(size=(64, 4)) for _ in range(3))

    def algebra():
        e1 = np.max(np.abs(q_mul(q_mul(p, q), r) - q_mul(p, q_mul(q, r))))
        e2 = np.max(np.abs(q_norm_sq(q_mul(p, q)) - q_norm_sq(p) * q_norm_sq(q)))
        plus, minus = ops_split(p)
        e3 = np.max(np.abs(plus + minus - p))
        e4 = np.max(np.abs(i_times(times_j(plus)) - plus))
        e5 = np.max(np.abs(q_conj(q_conj(p)) - p))
        return max(e1, e2, e3, e4, e5), 1e-12

    g = GaussianSpec(1.0, 1.3)
    f = gaussian_field(g, default_grid(g, n))
    M1, M2 = _params(1, 1.5, 0.5, -0.5), _params(0, 0.5, -0.5, 0.5)

    def oracle():
        ug = induced_grid(f.grid, M1, M2)
        return _rel(olct_2d_direct(f, M1, M2, ug).values, closed_on_grid(g, M1, M2, ug).values), 1e-6

    def fft_path():
        F = olct_2d_fft(f, M1, M2)
        return _rel(F.values, olct_2d_direct(f, M1, M2, F.grid).values), 1e-8

    def round_trip():
        F = olct_2d_fft(f, M1, M2)
        return _rel(inverse_olct_2d(F, M1, M2, f.grid).values, f.values), 1e-6

    qg = quaternion_gaussian(1.0, Grid2D.centered(n, 7.0))

    def three_paths():
        D = qolct_direct(qg, M1, M2).values
        return max(_rel(qolct_via_ops(qg, M1, M2).values, D),
                   _rel(qolct_via_qft(qg, M1, M2).values, D)), 1e-8

    def q_round_trip():
        F = qolct_via_ops(qg, M1, M2)
        return _rel(inverse_qolct(F, M1, M2, qg.grid).values, qg.values), 1e-6

    def modulation():
        return check_q_identities(qg, M1, M2)[0].lhs, 1e-10

    def plancherel():
        return check_q_identities(qg, M1, M2, g=qg)[1].lhs, 1e-4

    half = GaussianSpec(0.5, 0.5)
    fh = gaussian_field(half, default_grid(half, n))

    def young_equality():
        rep = check_young(f, 2.0, M1, M2)
        return abs(rep.lhs - rep.rhs) / rep.rhs, 1e-4

    def pitt_equality():
        rep = check_pitt(f, 0.0, M1, M2)
        return abs(rep.lhs - rep.rhs) / rep.rhs, 1e-4

    def logup_slope():
        h, B = 1e-6, abs(M1.b * M2.b)
        num = (pitt_factor(h, B, strict=False) - pitt_factor(-h, B, strict=False)) / (2 * h)
        return abs(num - logup_constant(B)), 1e-6

    def inequalities_hold():
        reps = [check_young(f, 1.5, M1, M2), check_pitt(fh, 0.5, FOURIER, FOURIER),
                check_logup(fh, M1, M2), check_nazarov(f, RectSet.square(1.0), RectSet.square(1.0), M1, M2),
                check_heisenberg(f, 1, M1, M2), check_heisenberg(f, 2, M1, M2)]
        ent = check_entropy(f, _params(1, 1.5), _params(1, 1.0))
        bad = [r.theorem_id for r in reps + [ent] if not r.satisfied]
        return float(len(bad)), 0.0

    def q_inequalities_hold():
        qn = qg.with_values(qg.values / np.sqrt(qg.norm_sq()))
        ids = ("young_q", "pitt_q", "logup_q", "entropy_q", "nazarov_q", "heisenberg_q")
        bad = [t for t in ids if not check_q_inequality(t, qn, _params(1, 1.0), _params(1, 1.0)).satisfied]
        return float(len(bad)), 0.0

    def effects():
        worst = 0.0
        for tid, probe, al in (("young", "shift", (0.7, -0.3)), ("entropy", "shift", (0.7, -0.3)),
                               ("entropy", "scale", 2.0), ("heisenberg", "scale", (2.0, 1.0)),
                               ("pitt", "shift", (0.5, 0.5))):
            rep = effect_probe(tid, f, probe, al, M1, M2)
            worst = max(worst, abs(rep.measured_delta - rep.predicted_delta))
        return worst, 1e-4

    return [("quaternion algebra", algebra), ("gaussian oracle", oracle),
            ("fft vs direct", fft_path), ("olct round trip", round_trip),
            ("qolct three paths", three_paths), ("qolct round trip", q_round_trip),
            ("modulation identity", modulation), ("plancherel", plancherel),
            ("young equality p=2", young_equality), ("pitt equality lambda=0", pitt_equality),
            ("logup constant slope", logup_slope), ("complex inequalities", inequalities_hold),
            ("quaternion inequalities", q_inequalities_hold), ("effect laws", effects)]


def run_selftest(n=128, seed=0, stream=None) -> bool:
    """Run every check, print one line each; True when all pass."""
    stream = stream or sys.stdout
    ok = True
    t0 = time.perf_counter()
    for name, fn in _checks(n, seed):
        t = time.perf_counter()
        try:
            value, tol = fn()
            passed = bool(value <= tol)
            detail = f"value={value:.3e} tol={tol:.0e}"
        except Exception as exc:  # report and continue with the next check
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'} {name:<26} {detail} ({time.perf_counter() - t:.1f}s)",
              file=stream)
    print(f"{'OK' if ok else 'FAILED'} n={n} seed={seed} total={time.perf_counter() - t0:.1f}s",
          file=stream)
    return ok
