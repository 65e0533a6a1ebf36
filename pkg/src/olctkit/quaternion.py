"""Real quaternion algebra and the orthogonal plane split.

Quaternions are stored as four reals in ``(w, x, y, z)`` order, meaning
``w + x i + y j + z k``.  The module functions accept either a
:class:`Quaternion` or any array whose last axis has length 4, so the same
code multiplies single values and whole sampled fields.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

__all__ = [
    "Quaternion", "OpsPair", "q_mul", "q_conj", "q_norm_sq", "q_scalar",
    "ops_split", "i_times", "times_j", "from_complex_pair", "to_complex_pair",
]


@dataclass(frozen=True)
class Quaternion:
    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def from_array(cls, a):
        a = np.asarray(a, dtype=float)
        return cls(float(a[0]), float(a[1]), float(a[2]), float(a[3]))

    def __array__(self, dtype=None, copy=None):
        return np.array([self.w, self.x, self.y, self.z], dtype=dtype or float)

    def __add__(self, other):
        return Quaternion.from_array(np.asarray(self) + np.asarray(_as_q(other)))

    def __sub__(self, other):
        return Quaternion.from_array(np.asarray(self) - np.asarray(_as_q(other)))

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if np.isscalar(other):
            return Quaternion.from_array(np.asarray(self) * float(other))
        return q_mul(self, other)

    def __rmul__(self, other):
        if np.isscalar(other):
            return Quaternion.from_array(np.asarray(self) * float(other))
        return q_mul(other, self)

    def conj(self):
        return q_conj(self)

    def norm_sq(self):
        return q_norm_sq(self)

    def scalar(self):
        return self.w

    def vector(self):
        return np.array([self.x, self.y, self.z])


I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)
ONE = Quaternion(1.0, 0.0, 0.0, 0.0)


class OpsPair(NamedTuple):
    q_plus: object
    q_minus: object


def _as_q(q):
    if isinstance(q, Quaternion):
        return np.asarray(q)
    if np.isscalar(q):
        return np.array([float(q), 0.0, 0.0, 0.0])
    return np.asarray(q, dtype=float)


def _wrap(like, arr):
    return Quaternion.from_array(arr) if isinstance(like, Quaternion) else arr


def q_mul(p, r):
    """Hamilton product ``p r``; broadcasts over leading axes."""
    pa, ra = _as_q(p), _as_q(r)
    p0, p1, p2, p3 = np.moveaxis(pa, -1, 0)
    r0, r1, r2, r3 = np.moveaxis(ra, -1, 0)
    out = np.stack([
        p0 * r0 - p1 * r1 - p2 * r2 - p3 * r3,
        p0 * r1 + p1 * r0 + p2 * r3 - p3 * r2,
        p0 * r2 - p1 * r3 + p2 * r0 + p3 * r1,
        p0 * r3 + p1 * r2 - p2 * r1 + p3 * r0,
    ], axis=-1)
    if isinstance(p, Quaternion) and isinstance(r, Quaternion):
        return Quaternion.from_array(out)
    return out


def q_conj(q):
    a = _as_q(q) * np.array([1.0, -1.0, -1.0, -1.0])
    return _wrap(q, a)


def q_norm_sq(q):
    a = _as_q(q)
    out = np.sum(a * a, axis=-1)
    return float(out) if isinstance(q, Quaternion) else out


def q_scalar(q):
    return _as_q(q)[..., 0]


def i_times(q):
    """Left multiplication by the unit ``i``."""
    w, x, y, z = np.moveaxis(_as_q(q), -1, 0)
    return _wrap(q, np.stack([-x, w, -z, y], axis=-1))


def times_j(q):
    """Right multiplication by the unit ``j``."""
    w, x, y, z = np.moveaxis(_as_q(q), -1, 0)
    return _wrap(q, np.stack([-y, -z, w, x], axis=-1))


def ops_split(q):
    """Split ``q`` into ``q+ = (q + i q j)/2`` and ``q- = (q - i q j)/2``.

    ``i q j`` only permutes and negates components, so both halves are
    half-sums of exact values and ``q+ + q-`` reproduces ``q`` to within one
    rounding of each half.
    """
    w, x, y, z = np.moveaxis(_as_q(q), -1, 0)
    plus = np.stack([w + z, x - y, y - x, z + w], axis=-1) * 0.5
    minus = np.stack([w - z, x + y, y + x, z - w], axis=-1) * 0.5
    return OpsPair(_wrap(q, plus), _wrap(q, minus))


def to_complex_pair(q):
    """Codec ``q = c1 + c2 j`` with ``c1 = w + x i`` and ``c2 = y + z i``."""
    a = _as_q(q)
    return a[..., 0] + 1j * a[..., 1], a[..., 2] + 1j * a[..., 3]


def from_complex_pair(c1, c2):
    c1 = np.asarray(c1, dtype=complex)
    c2 = np.asarray(c2, dtype=complex)
    return np.stack([c1.real, c1.imag, c2.real, c2.imag], axis=-1)
