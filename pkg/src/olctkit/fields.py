"""Sampling lattices and sampled fields, with CSV serialization.

A :class:`Grid2D` is a uniform tensor lattice evaluated by the midpoint rule:
node ``k`` on axis ``r`` sits at ``min_r + (k + 1/2) * step_r``, and every
node carries the weight ``step_1 * step_2``.  The same type describes signal
(t) and spectral (u) lattices.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import GridMismatch, IOFailure, ParseError, ValidationError

__all__ = [
    "Grid2D", "ComplexField2D", "QuaternionField2D", "DensityField2D",
    "is_power_of_two", "upsample", "zero_pad", "decimate",
    "write_complex_csv", "read_complex_csv", "write_quaternion_csv",
    "read_quaternion_csv",
]


def is_power_of_two(n):
    return n >= 1 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class Grid2D:
    n1: int
    n2: int
    t1_min: float
    t1_step: float
    t2_min: float
    t2_step: float

    def __post_init__(self):
        if self.n1 < 2 or self.n2 < 2:
            raise ValidationError("grid needs at least 2 nodes per axis")
        if not (self.t1_step > 0 and self.t2_step > 0):
            raise ValidationError("grid steps must be positive")

    @classmethod
    def centered(cls, n, half_width, n2=None, half_width2=None):
        n2 = n if n2 is None else n2
        hw2 = half_width if half_width2 is None else half_width2
        return cls(n, n2, -half_width, 2.0 * half_width / n, -hw2, 2.0 * hw2 / n2)

    @property
    def shape(self):
        return (self.n1, self.n2)

    @property
    def weight(self):
        return self.t1_step * self.t2_step

    @property
    def area(self):
        return self.n1 * self.t1_step * self.n2 * self.t2_step

    def axis(self, r):
        n, lo, h = (self.n1, self.t1_min, self.t1_step) if r == 1 else (
            self.n2, self.t2_min, self.t2_step)
        return lo + (np.arange(n) + 0.5) * h

    def center(self, r):
        n, lo, h = (self.n1, self.t1_min, self.t1_step) if r == 1 else (
            self.n2, self.t2_min, self.t2_step)
        return lo + 0.5 * n * h

    def mesh(self):
        return np.meshgrid(self.axis(1), self.axis(2), indexing="ij")

    def weights(self):
        return np.full(self.shape, self.weight)

    def pow2(self):
        return is_power_of_two(self.n1) and is_power_of_two(self.n2)

    def same_as(self, other, rtol=1e-12):
        a = np.array([self.t1_min, self.t1_step, self.t2_min, self.t2_step])
        b = np.array([other.t1_min, other.t1_step, other.t2_min, other.t2_step])
        scale = np.maximum(1.0, np.abs(a))
        return self.shape == other.shape and bool(np.all(np.abs(a - b) <= rtol * scale))


def _check_values(grid, values, trailing=()):
    if values.shape != grid.shape + trailing:
        raise GridMismatch(f"values of shape {values.shape} do not match grid {grid.shape}")
    if not np.all(np.isfinite(values)):
        raise ValidationError("field contains non-finite values")


@dataclass(frozen=True)
class ComplexField2D:
    grid: Grid2D
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex)
        _check_values(self.grid, v)
        object.__setattr__(self, "values", v)

    def with_values(self, values):
        return ComplexField2D(self.grid, values)

    def modulus_sq(self):
        return np.abs(self.values) ** 2

    def norm_sq(self):
        return float(np.sum(self.modulus_sq()) * self.grid.weight)


@dataclass(frozen=True)
class QuaternionField2D:
    grid: Grid2D
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        _check_values(self.grid, v, (4,))
        object.__setattr__(self, "values", v)

    @classmethod
    def from_complex_pair(cls, grid, c1, c2):
        from .quaternion import from_complex_pair
        return cls(grid, from_complex_pair(c1, c2))

    @classmethod
    def embed(cls, f: ComplexField2D):
        """Complex field ``w + x i`` viewed as a quaternion field."""
        return cls.from_complex_pair(f.grid, f.values, np.zeros(f.grid.shape))

    def complex_pair(self):
        from .quaternion import to_complex_pair
        return to_complex_pair(self.values)

    def with_values(self, values):
        return QuaternionField2D(self.grid, values)

    def modulus_sq(self):
        return np.sum(self.values ** 2, axis=-1)

    def norm_sq(self):
        return float(np.sum(self.modulus_sq()) * self.grid.weight)


@dataclass(frozen=True)
class DensityField2D:
    grid: Grid2D
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        _check_values(self.grid, v)
        if np.any(v < 0):
            raise ValidationError("density must be nonnegative")
        object.__setattr__(self, "values", v)

    @classmethod
    def of(cls, f):
        return cls(f.grid, f.modulus_sq())


# ---------------------------------------------------------------- resampling

def _centered_dft_axis(x, axis, inverse=False):
    """Centered DFT with half-shifted indices on both sides.

    Computes ``X_k = sum_j x_j exp(-+2 pi i (k - c)(j - c) / n)`` with
    ``c = (n - 1)/2`` through one FFT and two phase ramps.
    """
    n = x.shape[axis]
    c = 0.5 * (n - 1)
    idx = np.arange(n)
    s = 1.0 if inverse else -1.0
    shape = [1] * x.ndim
    shape[axis] = n
    pre = np.exp(-s * 2j * np.pi * c * idx / n).reshape(shape)
    post = np.exp(s * 2j * np.pi * (-c * idx + c * c) / n).reshape(shape)
    fn = np.fft.ifft if inverse else np.fft.fft
    y = fn(x * pre, axis=axis)
    if inverse:
        y = y * n
    return y * post


def upsample(f, factor: int):
    """Trigonometric interpolation of ``f`` onto a grid ``factor`` times finer.

    Both grids share the same covered rectangle.  Exact for fields whose
    discrete spectrum is negligible near the Nyquist band.
    """
    if factor == 1:
        return f
    if isinstance(f, QuaternionField2D):
        c1, c2 = f.complex_pair()
        u1 = upsample(ComplexField2D(f.grid, c1), factor)
        u2 = upsample(ComplexField2D(f.grid, c2), factor)
        return QuaternionField2D.from_complex_pair(u1.grid, u1.values, u2.values)
    g = f.grid
    v = f.values
    for axis in (0, 1):
        n = v.shape[axis]
        spec = _centered_dft_axis(v, axis)
        pad = [(0, 0), (0, 0)]
        extra = n * (factor - 1) // 2
        pad[axis] = (extra, extra)
        spec = np.pad(spec, pad)
        v = _centered_dft_axis(spec, axis, inverse=True) / n
    fine = Grid2D(g.n1 * factor, g.n2 * factor, g.t1_min, g.t1_step / factor,
                  g.t2_min, g.t2_step / factor)
    return ComplexField2D(fine, v)


def zero_pad(f, factor: int):
    """Extend the covered rectangle ``factor`` times with zeros, same step."""
    if factor == 1:
        return f
    g = f.grid
    e1 = g.n1 * (factor - 1) // 2
    e2 = g.n2 * (factor - 1) // 2
    pad = [(e1, e1), (e2, e2)] + [(0, 0)] * (f.values.ndim - 2)
    big = Grid2D(g.n1 + 2 * e1, g.n2 + 2 * e2, g.t1_min - e1 * g.t1_step, g.t1_step,
                 g.t2_min - e2 * g.t2_step, g.t2_step)
    return type(f)(big, np.pad(f.values, pad))


def decimate(f):
    """Keep every other node; the coarse grid covers the same rectangle."""
    g = f.grid
    coarse = Grid2D(g.n1 // 2, g.n2 // 2, g.t1_min - 0.5 * g.t1_step, 2 * g.t1_step,
                    g.t2_min - 0.5 * g.t2_step, 2 * g.t2_step)
    return type(f)(coarse, f.values[: 2 * coarse.n1: 2, : 2 * coarse.n2: 2])


# ----------------------------------------------------------------------- CSV

def _fmt(x):
    return repr(float(x))


def _write_rows(path, header, rows):
    try:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(header)
            w.writerows(rows)
    except OSError as exc:
        raise IOFailure(f"cannot write {path}: {exc}") from exc


def write_complex_csv(f: ComplexField2D, path, spectral=False):
    names = ["u1", "u2"] if spectral else ["t1", "t2"]
    a1, a2 = f.grid.axis(1), f.grid.axis(2)
    rows = ([_fmt(a1[i]), _fmt(a2[j]), _fmt(v.real), _fmt(v.imag)]
            for i in range(f.grid.n1) for j, v in enumerate(f.values[i]))
    _write_rows(path, names + ["re", "im"], rows)


def write_quaternion_csv(f: QuaternionField2D, path, spectral=False):
    names = ["u1", "u2"] if spectral else ["t1", "t2"]
    a1, a2 = f.grid.axis(1), f.grid.axis(2)
    rows = ([_fmt(a1[i]), _fmt(a2[j])] + [_fmt(c) for c in f.values[i, j]]
            for i in range(f.grid.n1) for j in range(f.grid.n2))
    _write_rows(path, names + ["w", "x", "y", "z"], rows)


def _read_table(path, ncols):
    try:
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise IOFailure(f"cannot read {path}: {exc}") from exc
    if not rows:
        raise ParseError("empty CSV", line=1)
    header = [h.strip() for h in rows[0]]
    if len(header) != ncols:
        raise ParseError(f"expected {ncols} columns, got {len(header)}", line=1)
    data = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != ncols:
            raise ParseError(f"expected {ncols} values", line=lineno)
        try:
            data.append([float(x) for x in row])
        except ValueError as exc:
            raise ParseError(str(exc), line=lineno) from exc
    return header, np.array(data).reshape(-1, ncols)


def _grid_from_nodes(c1, c2):
    a1, a2 = np.unique(c1), np.unique(c2)
    if len(a1) < 2 or len(a2) < 2 or len(c1) != len(a1) * len(a2):
        raise ParseError("nodes do not form a full tensor lattice")
    h1, h2 = np.diff(a1), np.diff(a2)
    if np.ptp(h1) > 1e-9 * h1.mean() or np.ptp(h2) > 1e-9 * h2.mean():
        raise ParseError("nodes are not uniformly spaced")
    s1, s2 = h1.mean(), h2.mean()
    return Grid2D(len(a1), len(a2), a1[0] - 0.5 * s1, s1, a2[0] - 0.5 * s2, s2)


def read_complex_csv(path) -> ComplexField2D:
    header, d = _read_table(path, 4)
    grid = _grid_from_nodes(d[:, 0], d[:, 1])
    order = np.lexsort((d[:, 1], d[:, 0]))
    vals = (d[order, 2] + 1j * d[order, 3]).reshape(grid.shape)
    return ComplexField2D(grid, vals)


def read_quaternion_csv(path) -> QuaternionField2D:
    header, d = _read_table(path, 6)
    grid = _grid_from_nodes(d[:, 0], d[:, 1])
    order = np.lexsort((d[:, 1], d[:, 0]))
    return QuaternionField2D(grid, d[order, 2:].reshape(grid.shape + (4,)))


def table_number(x):
    """Shortest representation capped at 9 significant digits."""
    x = float(x)
    if math.isnan(x) or math.isinf(x):
        return repr(x)
    return format(x, ".9g")
