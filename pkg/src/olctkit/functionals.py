"""Scalar functionals of sampled fields.

All reductions are midpoint-rule sums (node weight times integrand) using
numpy's pairwise summation, so results do not depend on thread count.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadExponent, LambdaOutOfRange, NotNormalized
from .fields import DensityField2D, upsample

__all__ = ["RectSet", "lp_norm", "radial_weighted_energy", "log_weighted_energy",
           "axis_second_moment", "axis_first_moment", "shannon_entropy",
           "tail_energy"]


@dataclass(frozen=True)
class RectSet:
    """Axis-aligned rectangle ``|t_r - center_r| < half_width_r``."""

    center: tuple = (0.0, 0.0)
    half_widths: tuple = (0.0, 0.0)

    def __post_init__(self):
        if min(self.half_widths) < 0:
            raise ValueError("half-widths must be nonnegative")

    @classmethod
    def empty(cls):
        return cls((0.0, 0.0), (0.0, 0.0))

    @classmethod
    def square(cls, half_width, center=(0.0, 0.0)):
        return cls(tuple(center), (half_width, half_width))

    @property
    def measure(self):
        return 4.0 * self.half_widths[0] * self.half_widths[1]

    def scaled(self, s1, s2):
        s1, s2 = abs(s1), abs(s2)
        return RectSet((self.center[0] * s1, self.center[1] * s2),
                       (self.half_widths[0] * s1, self.half_widths[1] * s2))

    def contains(self, t1, t2):
        return ((np.abs(t1 - self.center[0]) < self.half_widths[0])
                & (np.abs(t2 - self.center[1]) < self.half_widths[1]))


def _density(f):
    return f.modulus_sq()


def lp_norm(f, p) -> float:
    if p == np.inf or p == "inf":
        return float(np.sqrt(np.max(_density(f))))
    p = float(p)
    if not p >= 1:
        raise BadExponent(f"p = {p} < 1")
    return float(np.sum(_density(f) ** (p / 2)) * f.grid.weight) ** (1.0 / p)


def _radius(grid, center=(0.0, 0.0)):
    t1, t2 = grid.mesh()
    return np.hypot(t1 - center[0], t2 - center[1])


def radial_weighted_energy(f, lam, spectral=True, center=(0.0, 0.0)) -> float:
    """``sum w |node - center|^(-lam) |f|^2`` (spectral) or ``|node|^(+lam)`` (signal)."""
    lam = float(lam)
    if not 0 <= lam < 2:
        raise LambdaOutOfRange(f"lambda = {lam} outside [0, 2)")
    if lam == 0:
        return float(np.sum(_density(f)) * f.grid.weight)
    r = _radius(f.grid, center)
    weight = r ** (-lam) if spectral else r ** lam
    return float(np.sum(weight * _density(f)) * f.grid.weight)


def log_weighted_energy(f, center=(0.0, 0.0)) -> float:
    """``sum w ln|node - center| |f|^2``."""
    r = _radius(f.grid, center)
    return float(np.sum(np.log(r) * _density(f)) * f.grid.weight)


def axis_second_moment(f, axis) -> float:
    t = f.grid.mesh()[axis - 1]
    return float(np.sum(t * t * _density(f)) * f.grid.weight)


def axis_first_moment(f, axis) -> float:
    t = f.grid.mesh()[axis - 1]
    return float(np.sum(t * _density(f)) * f.grid.weight)


def shannon_entropy(rho: DensityField2D, tol=1e-6) -> float:
    v = rho.values
    w = rho.grid.weight
    mass = float(np.sum(v) * w)
    if abs(mass - 1.0) > tol:
        raise NotNormalized(f"density integrates to {mass!r}")
    safe = np.where(v > 1e-300, v, 1.0)
    return float(-np.sum(np.where(v > 1e-300, v * np.log(safe), 0.0)) * w)


def _cell_overlap(nodes, h, lo, hi):
    # fraction of each cell [t - h/2, t + h/2] inside (lo, hi)
    return np.clip((np.minimum(nodes + h / 2, hi) - np.maximum(nodes - h / 2, lo)) / h, 0.0, 1.0)


def tail_energy(f, T: RectSet, refine=4) -> float:
    """Energy outside ``T``.

    The field is first refined ``refine`` times by trigonometric
    interpolation; cells cut by the boundary then count by their covered
    fraction.
    """
    f = upsample(f, refine)
    g = f.grid
    (c1, c2), (h1, h2) = T.center, T.half_widths
    inside = np.outer(_cell_overlap(g.axis(1), g.t1_step, c1 - h1, c1 + h1),
                      _cell_overlap(g.axis(2), g.t2_step, c2 - h2, c2 + h2))
    return float(np.sum((1.0 - inside) * _density(f)) * g.weight)
