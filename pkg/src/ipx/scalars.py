"""Scalar backends and the tolerance policy.

Two interchangeable backends are supported:

* float: Python ``complex`` / numpy ``complex128`` (IEEE double precision);
* exact: :class:`GaussianRational`, a complex number whose real and
  imaginary parts are arbitrary-precision :class:`fractions.Fraction`.

Integers and Fractions are accepted as exact values wherever an exact
scalar is expected. Python floats and complex numbers are never silently
promoted to the exact backend.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import numpy as np

from .errors import BackendError, NonFiniteComparison

__all__ = [
    "GaussianRational",
    "TolerancePolicy",
    "DEFAULT_POLICY",
    "gr",
    "is_exact",
    "abs2",
    "to_complex",
    "exact_eq",
    "approx_le",
    "approx_eq",
    "exact_sqrt",
]


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)) and not isinstance(v, bool):
        return Fraction(v)
    if isinstance(v, bool):
        return Fraction(int(v))
    raise BackendError(f"cannot use {type(v).__name__} as an exact rational")


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """Exact complex number ``re + i*im`` with rational parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _frac(self.re))
        object.__setattr__(self, "im", _frac(self.im))

    @classmethod
    def coerce(cls, v) -> "GaussianRational":
        if isinstance(v, GaussianRational):
            return v
        if isinstance(v, (float, complex, np.floating, np.complexfloating)):
            raise BackendError("float value mixed into exact arithmetic")
        return cls(_frac(v))

    # numpy and Python's numeric tower look these up by name
    @property
    def real(self) -> Fraction:
        return self.re

    @property
    def imag(self) -> Fraction:
        return self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except BackendError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except BackendError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except BackendError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except BackendError:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except BackendError:
            return NotImplemented
        d = o.abs2()
        if d == 0:
            raise ZeroDivisionError("division by exact zero")
        n = self * o.conjugate()
        return GaussianRational(n.re / d, n.im / d)

    def __rtruediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except BackendError:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except BackendError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if self.im == 0:
            return f"GR({self.re})"
        return f"GR({self.re}, {self.im})"


def gr(re, im=0) -> GaussianRational:
    """Shorthand constructor; accepts ints, Fractions or ``"p/q"`` strings."""
    if isinstance(re, str):
        re = Fraction(re)
    if isinstance(im, str):
        im = Fraction(im)
    return GaussianRational(re, im)


def is_exact(v) -> bool:
    """True if ``v`` (scalar or array) lives on the exact backend."""
    if isinstance(v, np.ndarray):
        if v.dtype != object:
            return False
        return all(is_exact(e) for e in v.flat)
    if isinstance(v, (bool, np.bool_)):
        return False
    return isinstance(v, (GaussianRational, int, Fraction))


def abs2(z):
    """``|z|^2`` on either backend; elementwise for arrays."""
    if isinstance(z, GaussianRational):
        return z.abs2()
    if isinstance(z, (int, Fraction)):
        return Fraction(z) * Fraction(z)
    if isinstance(z, np.ndarray) and z.dtype == object:
        return np.vectorize(abs2, otypes=[object])(z)
    return np.real(z) ** 2 + np.imag(z) ** 2


def to_complex(v):
    """Round exact values (scalar or array) to double precision."""
    if isinstance(v, np.ndarray):
        if v.dtype == object:
            return np.array([complex(e) for e in v.flat], dtype=complex).reshape(v.shape)
        return v.astype(complex)
    return complex(v)


def exact_sqrt(q: Fraction) -> Fraction:
    """Square root of a nonnegative rational, if it is itself rational."""
    q = _frac(q)
    if q < 0:
        raise ValueError("square root of a negative rational")
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn != n or rd * rd != d:
        raise BackendError(f"sqrt({q}) is irrational; not representable exactly")
    return Fraction(rn, rd)


def exact_eq(a, b) -> bool:
    """Exact equality of two exact-backend scalars."""
    if not (is_exact(a) and is_exact(b)):
        raise BackendError("exact comparison requires exact backend")
    return (GaussianRational.coerce(a) - GaussianRational.coerce(b)).is_zero()


@dataclass(frozen=True)
class TolerancePolicy:
    """Relative-plus-absolute tolerance: ``eps_abs + eps_rel * max(1, scale)``."""

    eps_rel: float = 1e-9
    eps_abs: float = 1e-12

    def __post_init__(self):
        if not (self.eps_rel > 0 and self.eps_abs > 0):
            raise ValueError("tolerances must be positive")

    def tolerance(self, scale):
        return self.eps_abs + self.eps_rel * np.maximum(1.0, np.abs(scale))

    def le(self, lhs, rhs, scale):
        return approx_le(lhs, rhs, scale, self)

    def eq(self, lhs, rhs, scale):
        return approx_eq(lhs, rhs, scale, self)


DEFAULT_POLICY = TolerancePolicy()


def _check_finite(*vals):
    for v in vals:
        if not np.all(np.isfinite(v)):
            raise NonFiniteComparison()


def approx_le(lhs, rhs, scale=1.0, policy: TolerancePolicy = DEFAULT_POLICY):
    """``lhs <= rhs`` up to ``policy.tolerance(scale)``; broadcasts over arrays."""
    _check_finite(lhs, rhs, scale)
    out = np.asarray(lhs) <= np.asarray(rhs) + policy.tolerance(scale)
    return bool(out) if out.ndim == 0 else out


def approx_eq(lhs, rhs, scale=1.0, policy: TolerancePolicy = DEFAULT_POLICY):
    a = approx_le(lhs, rhs, scale, policy)
    b = approx_le(rhs, lhs, scale, policy)
    return a & b
