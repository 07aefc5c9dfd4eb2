"""Coordinate vectors, inner products, Gram matrices and constrained sampling.

Vectors are plain numpy arrays whose last axis is the coordinate axis:
``complex128`` on the float backend, ``object`` arrays of
:class:`~ipx.scalars.GaussianRational` on the exact backend. Every function
broadcasts over leading batch axes, so a stack of ``N`` vectors is an array
of shape ``(N, dim)``.

The inner product is linear in the first argument,
``inner(x, y) = sum_i x_i * conj(y_i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BackendError, ConstraintError, DimensionError, InfeasibleConstraints
from .scalars import DEFAULT_POLICY, GaussianRational, TolerancePolicy, exact_sqrt

NONZERO_THRESHOLD = 1e-6
PROPORTIONAL_THRESHOLD = 1e-6
RANK_RTOL = 1e-12


def vec(entries, exact=False) -> np.ndarray:
    """Build a vector (or stack of vectors) on the requested backend."""
    if exact:
        arr = np.asarray(entries, dtype=object)
        out = np.empty(arr.shape, dtype=object)
        for idx, e in np.ndenumerate(arr):
            if isinstance(e, str):
                e = Fraction(e)
            out[idx] = GaussianRational.coerce(e)
        return out
    return np.asarray(entries, dtype=complex)


def is_exact_array(x) -> bool:
    return isinstance(x, np.ndarray) and x.dtype == object


def is_real(x, atol=0.0):
    """True where every coordinate has zero imaginary part."""
    if is_exact_array(x):
        return all(GaussianRational.coerce(e).im == 0 for e in x.flat)
    return bool(np.all(np.abs(np.imag(x)) <= atol))


def _check_pair(x, y):
    x, y = np.asarray(x), np.asarray(y)
    if x.shape[-1] != y.shape[-1]:
        raise DimensionError(f"dimension mismatch: {x.shape[-1]} vs {y.shape[-1]}")
    if (x.dtype == object) != (y.dtype == object):
        raise BackendError("backend mismatch: exact and float vectors mixed")
    return x, y


def inner(x, y):
    """``<x, y>``, linear in ``x`` and conjugate-linear in ``y``."""
    x, y = _check_pair(x, y)
    return np.sum(x * np.conj(y), axis=-1)


def norm_sq(x):
    """``<x, x>`` as a real number (a Fraction on the exact backend)."""
    x = np.asarray(x)
    if x.dtype == object:
        s = inner(x, x)
        if isinstance(s, np.ndarray):
            return np.vectorize(lambda g: GaussianRational.coerce(g).re, otypes=[object])(s)
        return GaussianRational.coerce(s).re
    return np.sum(x.real**2 + x.imag**2, axis=-1)


def norm(x):
    """Euclidean norm. On the exact backend only perfect squares are allowed."""
    x = np.asarray(x)
    if x.dtype == object:
        n2 = norm_sq(x)
        if isinstance(n2, np.ndarray):
            return np.vectorize(exact_sqrt, otypes=[object])(n2)
        return exact_sqrt(n2)
    return np.sqrt(norm_sq(x))


def defect(x, y):
    """``|x|^2 |y|^2 - |<x, y>|^2``, the Cauchy-Schwarz gap.

    The float path goes through the orthogonal residual
    ``|y|^2 x - <x,y> y`` so near-parallel pairs do not lose all digits.
    """
    x, y = _check_pair(x, y)
    if x.dtype == object:
        c = inner(x, y)
        return norm_sq(x) * norm_sq(y) - GaussianRational.coerce(c).abs2()
    ny = norm_sq(y)
    r = ny[..., None] * x - inner(x, y)[..., None] * y
    safe = np.where(ny > 0, ny, 1.0)
    return np.where(ny > 0, norm_sq(r) / safe, 0.0)


def project_out(y, z):
    """``y - (<y,z>/|z|^2) z``: the component of ``y`` orthogonal to ``z``."""
    y, z = _check_pair(y, z)
    nz = norm_sq(z)
    if z.dtype == object:
        if nz == 0:
            raise ConstraintError("projection onto zero vector")
        return y - (inner(y, z) / nz) * z
    if np.any(nz == 0):
        raise ConstraintError("projection onto zero vector")
    return y - (inner(y, z) / nz)[..., None] * z


def project_out_span(v, Z, rtol=RANK_RTOL):
    """Project ``v`` onto the orthogonal complement of the rows of ``Z``.

    ``Z`` has shape ``(..., k, dim)``; rank deficiency is handled by
    discarding singular directions below ``rtol * s_max``.
    """
    v, Z = np.asarray(v, dtype=complex), np.asarray(Z, dtype=complex)
    if v.shape[-1] != Z.shape[-1]:
        raise DimensionError("dimension mismatch")
    U, s, _ = np.linalg.svd(np.swapaxes(Z, -1, -2), full_matrices=False)
    smax = s[..., :1]
    keep = (s > rtol * np.where(smax > 0, smax, 1.0)) & (s > 0)
    U = U * keep[..., None, :]
    # coefficients <v, u_j> for each basis column u_j
    coef = np.einsum("...i,...ij->...j", v, np.conj(U))
    return v - np.einsum("...j,...ij->...i", coef, U)


def gram(Z):
    """Gram matrix ``G[..., i, j] = <z_i, z_j>`` of the rows of ``Z``."""
    if isinstance(Z, (list, tuple)):
        dims = {np.shape(z)[-1] for z in Z}
        if len(dims) > 1:
            raise DimensionError("dimension mismatch in Gram set")
        kinds = {np.asarray(z).dtype == object for z in Z}
        if len(kinds) > 1:
            raise BackendError("backend mismatch in Gram set")
        Z = np.stack([np.asarray(z) for z in Z], axis=-2)
    Z = np.asarray(Z)
    if Z.dtype == object:
        return np.sum(Z[..., :, None, :] * np.conj(Z[..., None, :, :]), axis=-1)
    return Z @ np.conj(np.swapaxes(Z, -1, -2))


# -- constraints ---------------------------------------------------------


@dataclass(frozen=True)
class _Flag:
    name: str

    def __repr__(self):
        return self.name


REAL = _Flag("REAL")
NONZERO = _Flag("NONZERO")
UNIT = _Flag("UNIT")


@dataclass(frozen=True, eq=False)
class OrthogonalTo:
    """Orthogonal to ``target``; with ``span=True`` the target is a set
    (shape ``(..., k, dim)``) and the vector must be orthogonal to all of it.
    A list or tuple target is taken as a set."""

    target: object
    span: bool = False

    def __post_init__(self):
        if isinstance(self.target, (list, tuple)):
            object.__setattr__(self, "target", np.stack([np.asarray(z) for z in self.target]))
            object.__setattr__(self, "span", True)


@dataclass(frozen=True, eq=False)
class InnerEqualsOne:
    target: object


@dataclass(frozen=True, eq=False)
class NotProportionalTo:
    target: object


def _orth(v, t, span=False):
    t = np.asarray(t, dtype=complex)
    if span:
        return project_out_span(v, t)
    nt = norm_sq(t)
    safe = np.where(nt > 0, nt, 1.0)
    return v - np.where(nt > 0, inner(v, t) / safe, 0.0)[..., None] * t


def enforce(v, constraints):
    """Deterministically map raw coordinates onto the constraint set.

    Applied in the order REAL, ORTHOGONAL_TO, INNER_EQUALS_ONE, UNIT (and
    REAL once more to clear rounding in imaginary parts). NONZERO and
    NOT_PROPORTIONAL_TO are checks, not maps; see :func:`satisfies`.
    """
    v = np.array(v, dtype=complex)
    real = REAL in constraints
    if real:
        v = v.real.astype(complex)
    for c in constraints:
        if isinstance(c, OrthogonalTo):
            v = _orth(v, c.target, c.span)
    for c in constraints:
        if isinstance(c, InnerEqualsOne):
            t = np.asarray(c.target, dtype=complex)
            nt = norm_sq(t)
            safe = np.where(nt > 0, nt, 1.0)
            v = v + ((1.0 - inner(v, t)) / safe)[..., None] * t
    if UNIT in constraints:
        n = np.sqrt(norm_sq(v))
        v = v / np.where(n > 0, n, 1.0)[..., None]
    if real:
        v = v.real.astype(complex)
    return v


def satisfies(v, constraints, policy: TolerancePolicy = DEFAULT_POLICY, strict=False):
    """Boolean mask (over batch axes) of rows meeting every constraint.

    ``strict`` applies the sampler thresholds (1e-6) for NONZERO and
    NOT_PROPORTIONAL_TO; otherwise the tolerance policy is used.
    """
    v = np.asarray(v, dtype=complex)
    n = np.sqrt(norm_sq(v))
    ok = np.ones(v.shape[:-1], dtype=bool)
    tol = policy.tolerance
    for c in constraints:
        if c is REAL:
            ok &= np.all(np.abs(v.imag) <= policy.eps_abs, axis=-1)
        elif c is NONZERO:
            ok &= n > (NONZERO_THRESHOLD if strict else policy.eps_abs)
        elif c is UNIT:
            ok &= np.abs(n - 1.0) <= tol(1.0)
        elif isinstance(c, OrthogonalTo):
            t = np.asarray(c.target, dtype=complex)
            if c.span:
                ip = np.abs(np.sum(v[..., None, :] * np.conj(t), axis=-1))
                sc = n[..., None] * np.sqrt(norm_sq(t))
                ok &= np.all(ip <= tol(sc), axis=-1)
            else:
                ok &= np.abs(inner(v, t)) <= tol(n * np.sqrt(norm_sq(t)))
        elif isinstance(c, InnerEqualsOne):
            t = np.asarray(c.target, dtype=complex)
            ok &= np.abs(inner(v, t) - 1.0) <= tol(n * np.sqrt(norm_sq(t)))
        elif isinstance(c, NotProportionalTo):
            w = np.asarray(c.target, dtype=complex)
            nw = norm_sq(w)
            r = np.sqrt(norm_sq(_orth(v, w)))
            thr = PROPORTIONAL_THRESHOLD * n if strict else tol(n)
            ok &= (nw > 0) & (r >= thr)
        else:
            raise TypeError(f"unknown constraint {c!r}")
    return ok


def gaussian(rng, shape, real=False):
    """I.i.d. standard real or complex Gaussian entries."""
    if real:
        return rng.standard_normal(shape).astype(complex)
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def sample(dim, constraints=(), seed=0, size=None, max_attempts=100):
    """Draw a constrained random vector (or ``size`` of them, stacked).

    Constraint targets are shared by every drawn row. Rows failing
    NONZERO / NOT_PROPORTIONAL_TO (or left unsatisfiable by the
    projections) are redrawn, at most ``max_attempts`` times.
    """
    if dim < 1:
        raise DimensionError("dim must be >= 1")
    constraints = tuple(constraints)
    rng = np.random.default_rng(seed)
    n = 1 if size is None else int(size)
    real = REAL in constraints
    out = enforce(gaussian(rng, (n, dim), real), constraints)
    bad = ~satisfies(out, constraints, strict=True)
    attempts = 1
    while bad.any():
        if attempts >= max_attempts:
            raise InfeasibleConstraints(
                f"constraints {constraints!r} infeasible in dim {dim} after {max_attempts} attempts"
            )
        idx = np.flatnonzero(bad)
        fresh = enforce(gaussian(rng, (idx.size, dim), real), constraints)
        out[idx] = fresh
        bad[idx] = ~satisfies(fresh, constraints, strict=True)
        attempts += 1
    return out[0] if size is None else out


def random_exact(rng, shape, real=False, num=9, den=9):
    """Random Gaussian-rational array with small numerators/denominators."""
    shape = (shape,) if np.isscalar(shape) else tuple(shape)
    size = int(np.prod(shape)) if shape else 1
    re_n = rng.integers(-num, num + 1, size)
    re_d = rng.integers(1, den + 1, size)
    if real:
        im_n, im_d = np.zeros(size, dtype=int), np.ones(size, dtype=int)
    else:
        im_n, im_d = rng.integers(-num, num + 1, size), rng.integers(1, den + 1, size)
    flat = [
        GaussianRational(Fraction(int(a), int(b)), Fraction(int(c), int(d)))
        for a, b, c, d in zip(re_n, re_d, im_n, im_d)
    ]
    out = np.empty(size, dtype=object)
    out[:] = flat
    return out.reshape(shape) if shape else out[0]


def random_unitary(dim, rng):
    """Haar-distributed unitary matrix."""
    from scipy.stats import unitary_group

    if dim == 1:
        return np.exp(2j * np.pi * rng.random()) * np.ones((1, 1))
    return unitary_group.rvs(dim, random_state=rng)
