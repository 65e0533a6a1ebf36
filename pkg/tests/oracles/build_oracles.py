"""Regenerate ``frozen.json``: closed-form Gaussian values in 30-digit arithmetic.

Nothing here imports the package.  Every value follows from the modulus of
the transformed Gaussian, which per axis is a normal density in ``u`` with
mean ``tau`` and variance ``(a^2 + 4 alpha^2 b^2) / (4 alpha)`` once the input
``exp(-alpha |t|^2)`` is normalized.

Run ``python tests/oracles/build_oracles.py`` to rebuild; the tests only read
the JSON.
"""
import itertools
import json
from pathlib import Path

import mpmath as mp

mp.mp.dps = 30
PI, E = mp.pi, mp.e


def spectral_var(alpha, a, b):
    return (a * a + 4 * alpha * alpha * b * b) / (4 * alpha)


def signal_var(alpha):
    return 1 / (4 * mp.mpf(alpha))


def gauss_entropy_1d(var):
    return mp.log(2 * PI * E * var) / 2


def cell(alpha, a, b, tau=0.0):
    alpha, a, b, tau = (mp.mpf(x) for x in (alpha, a, b, tau))
    vt, vu = signal_var(alpha), spectral_var(alpha, a, b)
    B = b * b
    out = {
        "signal_moment": vt,
        "spectral_moment": vu + tau * tau,
        "signal_entropy": 2 * gauss_entropy_1d(vt),
        "spectral_entropy": 2 * gauss_entropy_1d(vu),
        "entropy_rhs": mp.log(PI * E) + B * mp.log(B),
    }
    out["entropy_lhs"] = out["signal_entropy"] + B * out["spectral_entropy"]
    if tau == 0:
        # |x|^2 / (2 var) is standard exponential for an isotropic 2D normal
        out["log_signal"] = (mp.log(2 * vt) - mp.euler) / 2
        out["log_spectral"] = (mp.log(2 * vu) - mp.euler) / 2
        for lam in ("0.25", "0.5", "0.75", "1.5"):
            L = mp.mpf(lam)
            out[f"pitt_lhs_{lam}"] = (2 * vu) ** (-L / 2) * mp.gamma(1 - L / 2)
            out[f"pitt_signal_{lam}"] = (2 * vt) ** (L / 2) * mp.gamma(1 + L / 2)
    return {k: float(v) for k, v in out.items()}


def young(alpha, a, b, p):
    """Norms for the unnormalized ``exp(-alpha |t|^2)``, ``b1 = b2 = b``."""
    alpha, a, b, p = (mp.mpf(x) for x in (alpha, a, b, p))
    q = p / (p - 1)
    D = a * a + 4 * alpha * alpha * b * b
    lhs = (D ** (-q / 4) * mp.sqrt(PI * D / (q * alpha))) ** (2 / q)
    fp = (PI / (p * alpha)) ** (1 / p)
    B = b * b
    K = B ** (1 / q - mp.mpf(1) / 2) * (p ** (1 / p) / q ** (1 / q)) * (2 * PI) ** (1 / q - 1 / p)
    return {"lhs": float(lhs), "signal_norm": float(fp), "K": float(K), "rhs": float(K * fp)}


def nazarov(alpha, a, b, h):
    """``C`` with ``E = C exp(C |T|^2) tails`` for squares of half-width ``h``."""
    alpha, a, b, h = (mp.mpf(x) for x in (alpha, a, b, h))
    E = PI / (2 * alpha)
    inside_t = E * mp.erf(mp.sqrt(2 * alpha) * h) ** 2
    vu = spectral_var(alpha, a, b) / 1  # normalized variance per axis
    # the spectral density carries the same total energy E
    inside_u = E * mp.erf(abs(b) * h / mp.sqrt(2 * vu)) ** 2
    tails = 2 * E - inside_t - inside_u
    m = (4 * h * h) ** 2
    if m == 0:
        return float(E / tails)
    C = mp.findroot(lambda C: mp.log(C) + C * m - mp.log(E / tails), mp.mpf("0.1"))
    return float(C)


def main():
    data = {"constants": {
        "psi_quarter": float(mp.digamma(mp.mpf(1) / 4)),
        "logup_K0_unit": float(-mp.digamma(mp.mpf(1) / 4) / 2),
        "euler_gamma": float(mp.euler),
        "ln_pi_e": float(mp.log(PI * E)),
    }}
    data["pitt_constant"] = {lam: float(mp.gamma((1 - mp.mpf(lam)) / 4) / mp.gamma((1 + mp.mpf(lam)) / 4))
                             for lam in ("0", "0.25", "0.5", "0.75", "1.5")}
    cells = {}
    for a, b, alpha in itertools.product((0, 1), (0.5, 1, 1.1, 1.5, 2), (0.5, 1, 1.5, 2.5)):
        cells[f"{a}|{b}|{alpha}|0"] = cell(alpha, a, b)
    cells["1|1.5|1|0.5"] = cell(1, 1, 1.5, 0.5)
    data["gaussian"] = cells
    data["young"] = {f"{alpha}|{a}|{b}|{p}": young(alpha, a, b, p)
                     for alpha, a, b, p in itertools.product((1, 1.5), (0, 1), (0.5, 1, 1.5),
                                                             (1.25, 1.5, 2))}
    data["nazarov"] = {f"{alpha}|{a}|{b}|{h}": nazarov(alpha, a, b, h)
                       for alpha, a, b, h in itertools.product((1,), (1,), (1, 1.5), (0, 0.5, 1, 2))}
    # fixed quaternion products, expanded by hand from i^2 = j^2 = k^2 = ijk = -1
    data["quaternion_products"] = [
        {"p": [1, 2, 3, 4], "q": [5, 6, 7, 8], "pq": [-60, 12, 30, 24]},
        {"p": [0, 1, 0, 0], "q": [0, 0, 1, 0], "pq": [0, 0, 0, 1]},
        {"p": [0, 0, 1, 0], "q": [0, 1, 0, 0], "pq": [0, 0, 0, -1]},
        {"p": [0.5, -1, 2, 0], "q": [1, 0, -1, 3], "pq": [2.5, 5, 4.5, 2.5]},
    ]
    out = Path(__file__).with_name("frozen.json")
    out.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
