"""Two-dimensional offset linear canonical transform on sampled fields.

For one axis with parameters ``(a, b, c, d, tau, eta)`` and ``ad - bc = 1``
the kernel is::

    K(t, u) = (2 pi i b)^(-1/2)
              * exp{ i/(2b) [a t^2 + 2t(tau - u) - 2u(d tau - b eta) + d u^2 + d tau^2] }

and the 2D transform is the tensor product of two such kernels.  Two
evaluation paths are provided: :func:`olct_2d_direct` sums the kernel against
the samples (any output lattice), and :func:`olct_2d_fft` factors the kernel
into chirp, FFT, chirp (output on the lattice induced by the FFT).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
import scipy.fft as sfft

from .errors import (DegenerateB, GridMismatch, NonPowerOfTwo,
                     SymplecticViolation, UnsupportedOrder, ZeroScale)
from .fields import ComplexField2D, Grid2D

__all__ = [
    "OLCTParams", "ShiftLaw", "validate_params", "kernel_1d", "kernel_matrix",
    "amplitude", "induced_grid", "olct_2d_direct", "olct_2d_fft", "olct_2d",
    "inverse_params", "inverse_constant", "inverse_olct_2d", "scale_map",
    "shift_law", "derivative_op", "FOURIER", "IDENTITY_CHIRP",
]


@dataclass(frozen=True)
class OLCTParams:
    a: float
    b: float
    c: float
    d: float
    tau: float = 0.0
    eta: float = 0.0

    @classmethod
    def from_seq(cls, seq):
        vals = [float(v) for v in seq]
        if len(vals) == 4:
            vals += [0.0, 0.0]
        if len(vals) != 6:
            raise ValueError("OLCT parameters need 4 or 6 numbers")
        return cls(*vals)

    def as_tuple(self):
        return (self.a, self.b, self.c, self.d, self.tau, self.eta)

    def det(self):
        return self.a * self.d - self.b * self.c

    def j_conjugate(self):
        """Parameters whose kernel phase is the negative of this kernel's.

        Used for the plus half of the orthogonal plane split, where the
        right-hand j-kernel acts as ``exp(-i theta)``.
        """
        return OLCTParams(self.a, -self.b, -self.c, self.d, self.tau, -self.eta)


FOURIER = OLCTParams(0.0, 1.0, -1.0, 0.0)
IDENTITY_CHIRP = OLCTParams(1.0, 1.0, 0.0, 1.0)


def validate_params(p: OLCTParams) -> OLCTParams:
    if p.b == 0:
        raise DegenerateB("b = 0 selects the chirp-multiplication branch, which is not implemented")
    if abs(p.det() - 1.0) > 1e-12:
        raise SymplecticViolation(f"ad - bc = {p.det()!r}, expected 1")
    return p


def amplitude(p: OLCTParams) -> complex:
    """Principal branch of ``(2 pi i b)^(-1/2)``."""
    return (2 * np.pi * abs(p.b)) ** -0.5 * np.exp(-1j * np.sign(p.b) * np.pi / 4)


def _phase(p, t, u):
    a, b, d, tau, eta = p.a, p.b, p.d, p.tau, p.eta
    return (a * t * t + 2 * t * (tau - u) - 2 * u * (d * tau - b * eta)
            + d * u * u + d * tau * tau) / (2 * b)


def kernel_1d(p: OLCTParams, t, u):
    validate_params(p)
    return amplitude(p) * np.exp(1j * _phase(p, np.asarray(t, float), np.asarray(u, float)))


def kernel_matrix(p: OLCTParams, u_nodes, t_nodes):
    """``K[m, n] = K_p(t_n, u_m)``."""
    return kernel_1d(p, t_nodes[None, :], u_nodes[:, None])


def induced_grid(tgrid: Grid2D, M1: OLCTParams, M2: OLCTParams) -> Grid2D:
    """Spectral lattice ``u_r = b_r xi_r`` produced by the FFT path.

    ``xi_r`` are the DFT angular frequencies of the t-lattice shifted by half
    a bin, so the lattice is symmetric about 0 and never contains it.
    """
    steps = []
    for p, n, h in ((M1, tgrid.n1, tgrid.t1_step), (M2, tgrid.n2, tgrid.t2_step)):
        steps.append(abs(p.b) * 2 * np.pi / (n * h))
    return Grid2D(tgrid.n1, tgrid.n2, -0.5 * tgrid.n1 * steps[0], steps[0],
                  -0.5 * tgrid.n2 * steps[1], steps[1])


def olct_2d_direct(f: ComplexField2D, M1: OLCTParams, M2: OLCTParams,
                   ugrid: Grid2D | None = None, method="tensor", nodes=None) -> ComplexField2D:
    """Midpoint quadrature of the tensor-kernel integral.

    ``method="tensor"`` evaluates the double sum as ``K1 @ (w f) @ K2.T``,
    which is the same sum reorganized through the kernel factorization.
    ``method="nodewise"`` forms the full kernel plane for every output node,
    O(n1 n2 m1 m2); ``nodes`` optionally restricts it to a list of flat output
    indices (other entries are left at zero), which the timing harness uses.
    """
    validate_params(M1)
    validate_params(M2)
    if not isinstance(f, ComplexField2D):
        raise GridMismatch("expected a ComplexField2D")
    ugrid = induced_grid(f.grid, M1, M2) if ugrid is None else ugrid
    g = f.grid
    if method == "tensor":
        K1 = kernel_matrix(M1, ugrid.axis(1), g.axis(1))
        K2 = kernel_matrix(M2, ugrid.axis(2), g.axis(2))
        out = K1 @ (f.values * g.weight) @ K2.T
        return ComplexField2D(ugrid, out)
    if method != "nodewise":
        raise ValueError(f"unknown method {method!r}")
    t1, t2 = g.mesh()
    u1, u2 = ugrid.axis(1), ugrid.axis(2)
    wf = f.values * g.weight
    amp = amplitude(M1) * amplitude(M2)
    out = np.zeros(ugrid.shape, dtype=complex)
    flat = range(ugrid.n1 * ugrid.n2) if nodes is None else nodes
    for idx in flat:
        i, j = divmod(int(idx), ugrid.n2)
        plane = np.exp(1j * (_phase(M1, t1, u1[i]) + _phase(M2, t2, u2[j])))
        out[i, j] = amp * np.sum(plane * wf)
    return ComplexField2D(ugrid, out)


def _axis_factors(p, n, h, t_nodes, t_center, u_nodes):
    """Pre- and post-multipliers that turn one axis of the kernel sum into an FFT.

    With ``t_j = t_center + (j - c) h``, ``xi_k = (k - c) 2 pi / (n h)`` and
    ``c = (n - 1)/2``::

        sum_j g_j exp(-i xi_k t_j)
            = exp(-i xi_k t_center) exp(2 pi i (c k - c^2)/n) FFT[g_j exp(2 pi i c j / n)]_k
    """
    c = 0.5 * (n - 1)
    idx = np.arange(n)
    chirp = np.exp(1j * (p.a * t_nodes ** 2 + 2 * t_nodes * p.tau) / (2 * p.b))
    pre = chirp * np.exp(2j * np.pi * c * idx / n)
    xi = (idx - c) * 2 * np.pi / (n * h)
    ramp = np.exp(2j * np.pi * (c * idx - c * c) / n) * np.exp(-1j * xi * t_center)
    if p.b < 0:
        ramp = ramp[::-1]
    post = amplitude(p) * np.exp(1j * (-2 * u_nodes * (p.d * p.tau - p.b * p.eta)
                                       + p.d * u_nodes ** 2 + p.d * p.tau ** 2) / (2 * p.b))
    return pre, ramp * post


def olct_2d_fft(f: ComplexField2D, M1: OLCTParams, M2: OLCTParams) -> ComplexField2D:
    """Chirp, FFT, chirp evaluation on :func:`induced_grid`."""
    validate_params(M1)
    validate_params(M2)
    g = f.grid
    if not g.pow2():
        raise NonPowerOfTwo(f"grid {g.shape} is not a power of two per axis")
    ugrid = induced_grid(g, M1, M2)
    pre1, post1 = _axis_factors(M1, g.n1, g.t1_step, g.axis(1), g.center(1), ugrid.axis(1))
    pre2, post2 = _axis_factors(M2, g.n2, g.t2_step, g.axis(2), g.center(2), ugrid.axis(2))
    x = sfft.fft2(f.values * np.outer(pre1, pre2))
    if M1.b < 0:
        x = x[::-1, :]
    if M2.b < 0:
        x = x[:, ::-1]
    return ComplexField2D(ugrid, x * np.outer(post1 * g.weight, post2))


def olct_2d(f: ComplexField2D, M1: OLCTParams, M2: OLCTParams) -> ComplexField2D:
    """Spectrum on the induced lattice by the fastest available path."""
    if f.grid.pow2():
        return olct_2d_fft(f, M1, M2)
    return olct_2d_direct(f, M1, M2)


def inverse_params(p: OLCTParams) -> OLCTParams:
    a, b, c, d, tau, eta = p.as_tuple()
    return OLCTParams(d, -b, -c, a, b * eta - d * tau, c * tau - a * eta)


def inverse_constant(p: OLCTParams) -> complex:
    """Unimodular factor that makes the inverse-parameter transform invert ``p``.

    The conjugate kernel equals the inverse-parameter kernel times
    ``exp{(i/2)(c d tau^2 - 2 a d tau eta + a b eta^2)}``.
    """
    a, b, c, d, tau, eta = p.as_tuple()
    return np.exp(0.5j * (c * d * tau ** 2 - 2 * a * d * tau * eta + a * b * eta ** 2))


def inverse_olct_2d(F: ComplexField2D, M1: OLCTParams, M2: OLCTParams,
                    tgrid: Grid2D) -> ComplexField2D:
    validate_params(M1)
    validate_params(M2)
    N1, N2 = inverse_params(M1), inverse_params(M2)
    back = olct_2d_direct(F, N1, N2, tgrid)
    return back.with_values(back.values * (inverse_constant(M1) * inverse_constant(M2)))


def scale_map(p: OLCTParams, alpha: float) -> OLCTParams:
    if alpha == 0:
        raise ZeroScale("scale factor must be nonzero")
    a2 = alpha * alpha
    return validate_params(OLCTParams(p.a / a2, p.b, p.c, p.d * a2, p.tau / alpha, alpha * p.eta))


@dataclass(frozen=True)
class ShiftLaw:
    spectral_shift: tuple
    phase: Callable

    def __call__(self, u1, u2):
        return self.phase(u1, u2)


def shift_law(M1: OLCTParams, M2: OLCTParams, alpha) -> ShiftLaw:
    """Transform of ``f(t - alpha)`` in terms of the transform of ``f``.

    ``O[f(. - alpha)](u) = O[f](u - a alpha) * phase(u)`` with, per axis,
    ``phase = exp{i alpha [c (u - tau) + a eta - a c alpha / 2]}``.
    """
    validate_params(M1)
    validate_params(M2)
    al1, al2 = (float(alpha[0]), float(alpha[1]))

    def axis_phase(p, al, u):
        return al * (p.c * (u - p.tau) + p.a * p.eta - 0.5 * p.a * p.c * al)

    def phase(u1, u2):
        u1, u2 = np.asarray(u1, float), np.asarray(u2, float)
        return np.exp(1j * (axis_phase(M1, al1, u1) + axis_phase(M2, al2, u2)))

    return ShiftLaw((M1.a * al1, M2.a * al2), phase)


def _diff4(v, h, axis):
    """First derivative, 4th-order central stencil, 2nd-order at the edges."""
    out = np.gradient(v, h, axis=axis, edge_order=2)
    sl = [slice(None)] * v.ndim

    def s(lo, hi):
        sl2 = list(sl)
        sl2[axis] = slice(lo, hi)
        return v[tuple(sl2)]

    n = v.shape[axis]
    if n >= 5:
        inner = (-s(4, n) + 8 * s(3, n - 1) - 8 * s(1, n - 3) + s(0, n - 4)) / (12 * h)
        sl2 = list(sl)
        sl2[axis] = slice(2, n - 2)
        out[tuple(sl2)] = inner
    return out


def derivative_op(f: ComplexField2D, M1: OLCTParams, M2: OLCTParams, m: int, n: int) -> ComplexField2D:
    """Apply ``-(d/dt_r + (i/b_r)(a_r t_r + tau_r))`` m times on axis 1, n times on axis 2.

    The transform of the result is ``(-i u1/b1)^m (-i u2/b2)^n`` times the
    transform of ``f``.
    """
    if m < 0 or n < 0 or m + n > 2:
        raise UnsupportedOrder(f"orders m={m}, n={n} unsupported (m + n <= 2)")
    validate_params(M1)
    validate_params(M2)
    g = f.grid
    v = f.values
    t1, t2 = g.mesh()
    for _ in range(m):
        v = -(_diff4(v, g.t1_step, 0) + 1j / M1.b * (M1.a * t1 + M1.tau) * v)
    for _ in range(n):
        v = -(_diff4(v, g.t2_step, 1) + 1j / M2.b * (M2.a * t2 + M2.tau) * v)
    return f.with_values(v)
