"""Two-sided quaternion OLCT.

The transform multiplies the quaternion signal by an i-plane kernel from the
left and a j-plane kernel from the right::

    O^H f(u) = sum_t w K^i_{M1}(u1, t1) f(t) K^j_{M2}(u2, t2)

Fields are handled through the codec ``f = c1 + c2 j`` (``c1 = w + x i``,
``c2 = y + z i``).  Left multiplication by an i-plane number is ordinary
complex multiplication of ``c1`` and ``c2``; right multiplication by a j-plane
number ``p + q j`` (``p``, ``q`` real) maps ``(c1, c2)`` to
``(c1 p - c2 q, c1 q + c2 p)``.
"""
from __future__ import annotations

import numpy as np
import scipy.fft as sfft

from .errors import NonPowerOfTwo, ValidationError
from .fields import ComplexField2D, Grid2D, QuaternionField2D
from .olct import (OLCTParams, induced_grid, kernel_matrix, olct_2d,
                   validate_params)
from .quaternion import from_complex_pair, ops_split, to_complex_pair

__all__ = ["QSpectrum2D", "qolct_direct", "qolct_via_ops", "qolct_via_qft",
           "inverse_qolct", "q_inner", "quaternion_gaussian", "check_q_identities",
           "check_q_inequality"]


class QSpectrum2D(QuaternionField2D):
    """Quaternion field on a spectral lattice."""


def _right_j(c1, c2, P, Q):
    """``(c1 + c2 j)`` summed against the right kernel ``P + Q j`` over axis 2."""
    return c1 @ P.T - c2 @ Q.T, c1 @ Q.T + c2 @ P.T


def qolct_direct(f: QuaternionField2D, M1: OLCTParams, M2: OLCTParams,
                 ugrid: Grid2D | None = None) -> QSpectrum2D:
    """Sandwich quadrature with the kernel order kept: left i-kernel, right j-kernel."""
    validate_params(M1)
    validate_params(M2)
    g = f.grid
    ugrid = induced_grid(g, M1, M2) if ugrid is None else ugrid
    c1, c2 = f.complex_pair()
    K1 = kernel_matrix(M1, ugrid.axis(1), g.axis(1))
    # the j-kernel has the same real/imaginary parts as the complex kernel,
    # read in the (1, j) plane
    K2 = kernel_matrix(M2, ugrid.axis(2), g.axis(2))
    w = g.weight
    left1, left2 = K1 @ (c1 * w), K1 @ (c2 * w)
    h1, h2 = _right_j(left1, left2, K2.real, K2.imag)
    return QSpectrum2D(ugrid, from_complex_pair(h1, h2))


def _complex_olct_pair(c1, c2, grid, M1, M2):
    a = olct_2d(ComplexField2D(grid, c1), M1, M2)
    b = olct_2d(ComplexField2D(grid, c2), M1, M2)
    return a.grid, a.values, b.values


def qolct_via_ops(f: QuaternionField2D, M1: OLCTParams, M2: OLCTParams, return_halves=False):
    """Plane-split evaluation through four complex transforms.

    On the plus half the right j-exponential acts as ``exp(-i theta)``, which
    is the complex kernel of ``M2.j_conjugate()``; on the minus half it acts as
    ``exp(+i theta)``, the kernel of ``M2`` itself.
    """
    validate_params(M1)
    validate_params(M2)
    g = f.grid
    if not g.pow2():
        raise NonPowerOfTwo(f"grid {g.shape} is not a power of two per axis")
    plus, minus = ops_split(f.values)
    p1, p2 = to_complex_pair(plus)
    m1, m2 = to_complex_pair(minus)
    ugrid, P1, P2 = _complex_olct_pair(p1, p2, g, M1, M2.j_conjugate())
    _, N1, N2 = _complex_olct_pair(m1, m2, g, M1, M2)
    Fp = from_complex_pair(P1, P2)
    Fm = from_complex_pair(N1, N2)
    out = QSpectrum2D(ugrid, Fp + Fm)
    if return_halves:
        return out, QSpectrum2D(ugrid, Fp), QSpectrum2D(ugrid, Fm)
    return out


def _plain_ft_factors(n, h, t_center):
    # sum_j g_j exp(-i xi_k t_j) on the centered half-shifted frequency lattice
    c = 0.5 * (n - 1)
    idx = np.arange(n)
    xi = (idx - c) * 2 * np.pi / (n * h)
    pre = np.exp(2j * np.pi * c * idx / n)
    post = np.exp(2j * np.pi * (c * idx - c * c) / n) * np.exp(-1j * xi * t_center)
    return pre, post


def two_sided_qft(c1, c2, grid: Grid2D):
    """``(1/2 pi) sum_t w exp(-i t1 xi1) f(t) exp(-j t2 xi2)`` in codec form.

    With ``P+- = c1 +- i c2`` the right factor ``exp(-j phi)`` multiplies
    ``P+`` by ``exp(-i phi)`` and ``P-`` by ``exp(+i phi)``, so two complex
    FFTs suffice, the second one with the axis-2 frequency reversed.
    """
    pre1, post1 = _plain_ft_factors(grid.n1, grid.t1_step, grid.center(1))
    pre2, post2 = _plain_ft_factors(grid.n2, grid.t2_step, grid.center(2))
    pre = np.outer(pre1, pre2)
    post = np.outer(post1, post2) * grid.weight / (2 * np.pi)
    Sp = sfft.fft2((c1 + 1j * c2) * pre) * post
    Sm = (sfft.fft2((c1 - 1j * c2) * pre) * post)[:, ::-1]
    return 0.5 * (Sp + Sm), (Sp - Sm) / 2j


def qolct_via_qft(f: QuaternionField2D, M1: OLCTParams, M2: OLCTParams) -> QSpectrum2D:
    """Chirp, two-sided QFT, chirp, with i-plane factors on the left and j-plane on the right."""
    validate_params(M1)
    validate_params(M2)
    g = f.grid
    if not g.pow2():
        raise NonPowerOfTwo(f"grid {g.shape} is not a power of two per axis")
    t1, t2 = g.axis(1), g.axis(2)
    c1, c2 = f.complex_pair()
    left = np.exp(1j * (M1.a * t1 ** 2 + 2 * t1 * M1.tau) / (2 * M1.b))[:, None]
    chi = ((M2.a * t2 ** 2 + 2 * t2 * M2.tau) / (2 * M2.b))[None, :]
    c1, c2 = left * c1, left * c2
    c1, c2 = c1 * np.cos(chi) - c2 * np.sin(chi), c1 * np.sin(chi) + c2 * np.cos(chi)
    s1, s2 = two_sided_qft(c1, c2, g)
    if M1.b < 0:
        s1, s2 = s1[::-1, :], s2[::-1, :]
    if M2.b < 0:
        s1, s2 = s1[:, ::-1], s2[:, ::-1]
    ugrid = induced_grid(g, M1, M2)
    u1, u2 = ugrid.axis(1), ugrid.axis(2)
    # (i b1)^(-1/2) exp(i Phi1) on the left
    phi1 = (M1.d * u1 ** 2 + M1.d * M1.tau ** 2 - 2 * u1 * (M1.d * M1.tau - M1.b * M1.eta)) / (2 * M1.b)
    lpost = (abs(M1.b) ** -0.5 * np.exp(1j * (phi1 - np.sign(M1.b) * np.pi / 4)))[:, None]
    s1, s2 = lpost * s1, lpost * s2
    # (j b2)^(-1/2) exp(j Phi2) on the right
    phi2 = (M2.d * u2 ** 2 + M2.d * M2.tau ** 2 - 2 * u2 * (M2.d * M2.tau - M2.b * M2.eta)) / (2 * M2.b)
    ang = (phi2 - np.sign(M2.b) * np.pi / 4)[None, :]
    r = abs(M2.b) ** -0.5
    p, q = r * np.cos(ang), r * np.sin(ang)
    s1, s2 = s1 * p - s2 * q, s1 * q + s2 * p
    return QSpectrum2D(ugrid, from_complex_pair(s1, s2))


def inverse_qolct(F: QuaternionField2D, M1: OLCTParams, M2: OLCTParams, tgrid: Grid2D) -> QuaternionField2D:
    """Sandwich sum against the conjugate kernels (left i-plane, right j-plane)."""
    validate_params(M1)
    validate_params(M2)
    ug = F.grid
    c1, c2 = F.complex_pair()
    K1 = kernel_matrix(M1, ug.axis(1), tgrid.axis(1)).conj().T
    K2 = kernel_matrix(M2, ug.axis(2), tgrid.axis(2)).T
    w = ug.weight
    left1, left2 = K1 @ (c1 * w), K1 @ (c2 * w)
    h1, h2 = _right_j(left1, left2, K2.real, -K2.imag)
    return QuaternionField2D(tgrid, from_complex_pair(h1, h2))


def q_inner(f: QuaternionField2D, g: QuaternionField2D) -> float:
    """Scalar part of ``sum w f conj(g)``, i.e. the componentwise dot product."""
    return float(np.sum(f.values * g.values) * f.grid.weight)


QGAUSS_WIDTHS = (1.0, 1.3, 0.8, 1.1)
QGAUSS_AMPS = (1.0, 0.5, 0.25, 0.125)


def quaternion_gaussian(alpha, grid: Grid2D, center=(0.0, 0.0), scale=(1.0, 1.0)) -> QuaternionField2D:
    """Components ``A_k exp(-s_k alpha |t - center|^2)`` with distinct widths per component."""
    t1, t2 = grid.mesh()
    x1 = scale[0] * (t1 - center[0])
    x2 = scale[1] * (t2 - center[1])
    r2 = x1 * x1 + x2 * x2
    comps = [A * np.exp(-s * alpha * r2) for A, s in zip(QGAUSS_AMPS, QGAUSS_WIDTHS)]
    return QuaternionField2D(grid, np.stack(comps, axis=-1))


def check_q_identities(f: QuaternionField2D, M1: OLCTParams, M2: OLCTParams,
                       g: QuaternionField2D | None = None, shift=(0.3, -0.2)):
    """Modulation identity and Parseval residuals as a pair of reports."""
    from .inequalities import InequalityReport, shift_field

    F, Fp, Fm = qolct_via_ops(f, M1, M2, return_halves=True)
    split = F.modulus_sq() - (Fp.modulus_sq() + Fm.modulus_sq())
    peak = float(np.max(F.modulus_sq()))
    mod_res = float(np.max(np.abs(split))) / peak
    tol = 1e-10
    r1 = InequalityReport("modulation", mod_res, tol, tol - mod_res, mod_res <= tol,
                          _pdict(M1, M2), 0.0, {"peak": peak})
    if g is None:
        g = shift_field(f, shift)
    G = qolct_via_ops(g, M1, M2)
    lhs = q_inner(F, G)
    rhs = q_inner(f, g)
    scale = np.sqrt(f.norm_sq() * g.norm_sq())
    res = abs(lhs - rhs) / scale
    r2 = InequalityReport("parseval", res, 1e-4, 1e-4 - res, res <= 1e-4, _pdict(M1, M2), 0.0,
                          {"spectral_inner": lhs, "signal_inner": rhs})
    return r1, r2


def _pdict(M1, M2):
    return {"M1": M1.as_tuple(), "M2": M2.as_tuple()}


def check_q_inequality(theorem_id, f: QuaternionField2D, M1: OLCTParams, M2: OLCTParams, **extras):
    """Quaternion-modulus versions of the six inequality checks.

    ``extras`` carries the per-theorem arguments: ``p`` (young_q), ``lam``
    (pitt_q), ``T1``/``T2`` (nazarov_q), ``k`` is not used by heisenberg_q,
    which takes the product over both axes.
    """
    from . import inequalities as iq

    eng = iq.QuaternionEngine(f, M1, M2)
    tid = theorem_id.removesuffix("_q")
    if tid == "young":
        rep = iq._young(eng, extras.get("p", 1.5))
    elif tid == "pitt":
        rep = iq._pitt(eng, extras.get("lam", 0.5), quaternion_form=True)
    elif tid == "logup":
        rep = iq._logup(eng)
    elif tid == "entropy":
        rep = iq._entropy(eng)
    elif tid == "nazarov":
        rep = iq._nazarov(eng, extras.get("T1", iq.default_rect()), extras.get("T2", iq.default_rect()))
    elif tid == "heisenberg":
        rep = iq._heisenberg_product(eng)
    else:
        raise ValidationError(f"unknown theorem {theorem_id!r}")
    return rep.renamed(theorem_id if theorem_id.endswith("_q") else theorem_id + "_q")
