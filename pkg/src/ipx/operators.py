"""Structured operators: finite sums of rank-one terms plus a multiple of I.

An operator ``T = sum_i c_i (u_i (x) v_i) + mu I`` acts by
``T(w) = sum_i c_i <w, v_i> u_i + mu w``. Coefficients may be scalars or
arrays over leading batch axes and vectors may be stacked, so one
:class:`StructuredOperator` can stand for a whole batch of operators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import linalg
from .errors import BackendError, ConstraintError, DimensionError
from .scalars import DEFAULT_POLICY, GaussianRational, TolerancePolicy, exact_sqrt, to_complex

__all__ = [
    "Term",
    "StructuredOperator",
    "rank_one",
    "identity",
    "selberg",
    "selberg_weights",
    "combine",
    "compose",
    "spectral_norm",
    "spectral_norm_dense",
    "is_self_adjoint",
    "is_positive",
]


@dataclass(frozen=True)
class Term:
    coeff: object
    left: np.ndarray
    right: np.ndarray


def _is_zero_scalar(c) -> bool:
    if isinstance(c, np.ndarray) and c.ndim > 0:
        return False
    try:
        return c == 0
    except (TypeError, ValueError):
        return False


def _col(c, extra):
    """Append ``extra`` trailing unit axes to a (possibly batched) scalar."""
    c = np.asarray(c)
    return c.reshape(c.shape + (1,) * extra)


@dataclass(frozen=True)
class StructuredOperator:
    terms: tuple = ()
    shift: object = 0
    dim: int = field(default=0)

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        dims = {np.shape(t.left)[-1] for t in self.terms} | {np.shape(t.right)[-1] for t in self.terms}
        if self.dim:
            dims.add(self.dim)
        if len(dims) != 1:
            raise DimensionError(f"dimension mismatch in operator terms: {sorted(dims)}")
        object.__setattr__(self, "dim", dims.pop())
        kinds = {np.asarray(t.left).dtype == object for t in self.terms}
        kinds |= {np.asarray(t.right).dtype == object for t in self.terms}
        if len(kinds) > 1:
            raise BackendError("backend mismatch in operator terms")

    @property
    def exact(self) -> bool:
        if self.terms:
            return np.asarray(self.terms[0].left).dtype == object
        return isinstance(self.shift, GaussianRational)

    def _eye(self):
        if self.exact:
            eye = np.empty((self.dim, self.dim), dtype=object)
            for i in range(self.dim):
                for j in range(self.dim):
                    eye[i, j] = GaussianRational(int(i == j))
            return eye
        return np.eye(self.dim, dtype=complex)

    def apply(self, w):
        """``T(w)``; ``w`` may carry batch axes."""
        w = np.asarray(w)
        if w.shape[-1] != self.dim:
            raise DimensionError("dimension mismatch")
        out = _col(self.shift, 1) * w
        for t in self.terms:
            out = out + _col(t.coeff, 1) * _col(linalg.inner(w, t.right), 1) * t.left
        return out

    __call__ = apply

    def form(self, a, b):
        """``<T a, b>``."""
        return linalg.inner(self.apply(a), b)

    @cached_property
    def dense(self) -> np.ndarray:
        m = _col(self.shift, 2) * self._eye()
        for t in self.terms:
            m = m + _col(t.coeff, 2) * (
                np.asarray(t.left)[..., :, None] * np.conj(np.asarray(t.right))[..., None, :]
            )
        return m

    def adjoint(self) -> "StructuredOperator":
        terms = [Term(np.conj(t.coeff), t.right, t.left) for t in self.terms]
        return StructuredOperator(terms, np.conj(self.shift), self.dim)

    def to_float(self) -> "StructuredOperator":
        if not self.exact:
            return self
        cv = lambda c: to_complex(np.asarray(c)) if isinstance(c, np.ndarray) else complex(c)
        terms = [Term(cv(t.coeff), to_complex(t.left), to_complex(t.right)) for t in self.terms]
        return StructuredOperator(terms, cv(self.shift), self.dim)

    def structurally_hermitian(self) -> bool:
        """Every term is ``c z (x) z`` with real ``c`` and the shift is real."""
        if np.any(np.imag(to_complex(np.asarray(self.shift))) != 0):
            return False
        for t in self.terms:
            if t.left is not t.right:
                return False
            if np.any(np.imag(to_complex(np.asarray(t.coeff))) != 0):
                return False
        return True


def identity(dim, exact=False) -> StructuredOperator:
    return StructuredOperator((), GaussianRational(1) if exact else 1.0, dim)


def rank_one(x, y) -> StructuredOperator:
    """``x (x) y``, acting as ``z -> <z, y> x``."""
    x, y = linalg._check_pair(x, y)
    one = GaussianRational(1) if x.dtype == object else 1.0
    return StructuredOperator((Term(one, x, y),), 0, x.shape[-1])


def _as_set(Z):
    if isinstance(Z, (list, tuple)):
        return [np.asarray(z) for z in Z]
    Z = np.asarray(Z)
    return [Z[..., i, :] for i in range(Z.shape[-2])]


def selberg_weights(Z):
    """Denominators ``d_i = sum_j |<z_i, z_j>|``, stacked on the last axis."""
    zs = _as_set(Z)
    if not zs:
        raise ConstraintError("Selberg set must be nonempty")
    G = linalg.gram(zs)
    if G.dtype == object:
        mods = np.vectorize(lambda g: exact_sqrt(GaussianRational.coerce(g).abs2()), otypes=[object])(G)
        d = np.sum(mods, axis=-1)
        if any(linalg.norm_sq(z) == 0 for z in zs):
            raise ConstraintError("Selberg set must contain nonzero vectors")
        return d
    if any(np.any(linalg.norm_sq(z) == 0) for z in zs):
        raise ConstraintError("Selberg set must contain nonzero vectors")
    return np.abs(G).sum(axis=-1)


def selberg(Z) -> StructuredOperator:
    """Selberg operator ``S_Z = sum_i (z_i (x) z_i) / sum_j |<z_i, z_j>|``.

    On the exact backend the moduli ``|<z_i, z_j>|`` must be rational.
    """
    zs = _as_set(Z)
    d = selberg_weights(zs)
    if d.dtype == object:
        if d.ndim != 1:
            raise BackendError("exact Selberg operators are not batched")
        terms = [Term(GaussianRational(1) / d[i], z, z) for i, z in enumerate(zs)]
    else:
        terms = [Term(1.0 / d[..., i], z, z) for i, z in enumerate(zs)]
    return StructuredOperator(terms, 0, zs[0].shape[-1])


def combine(parts, shift=0, dim=None) -> StructuredOperator:
    """``sum_k s_k T_k + shift * I`` for ``parts = [(s_k, T_k), ...]``."""
    dims = {T.dim for _, T in parts}
    if dim is not None:
        dims.add(dim)
    if len(dims) != 1:
        raise DimensionError("dimension mismatch in combine")
    terms = []
    total = shift
    for s, T in parts:
        terms.extend(Term(_mul(s, t.coeff), t.left, t.right) for t in T.terms)
        total = total + _mul(s, T.shift)
    return StructuredOperator(terms, total, dims.pop())


def _mul(a, b):
    if isinstance(a, np.ndarray) and isinstance(b, np.ndarray):
        return a * b
    if isinstance(b, np.ndarray):
        return b * a if b.dtype != object else np.asarray(a, dtype=object) * b
    return a * b


def compose(T: StructuredOperator, U: StructuredOperator) -> StructuredOperator:
    """``T U`` (apply ``U`` first), expanded back into structured form."""
    if T.dim != U.dim:
        raise DimensionError("dimension mismatch in compose")
    terms = []
    for t in T.terms:
        for u in U.terms:
            cross = linalg.inner(u.left, t.right)
            terms.append(Term(_mul(_mul(t.coeff, u.coeff), cross), t.left, u.right))
    if not _is_zero_scalar(U.shift):
        terms.extend(Term(_mul(t.coeff, U.shift), t.left, t.right) for t in T.terms)
    if not _is_zero_scalar(T.shift):
        terms.extend(Term(_mul(T.shift, u.coeff), u.left, u.right) for u in U.terms)
    return StructuredOperator(terms, _mul(T.shift, U.shift), T.dim)


def spectral_norm_dense(T: StructuredOperator):
    """Largest singular value of the dense matrix."""
    D = T.to_float().dense
    return np.linalg.svd(D, compute_uv=False)[..., 0]


def spectral_norm(T: StructuredOperator, rtol=linalg.RANK_RTOL):
    """Operator norm via reduction to the span of the term vectors.

    The distinct term vectors are orthonormalised through the eigen-
    decomposition of their Gram matrix; the operator then splits as a
    ``k x k`` block on that span plus ``mu I`` on its complement.
    """
    T = T.to_float()
    shift = np.asarray(T.shift, dtype=complex)
    if not T.terms:
        return np.abs(shift) * 1.0
    vecs, index = [], {}
    for t in T.terms:
        for v in (t.left, t.right):
            if id(v) not in index:
                index[id(v)] = len(vecs)
                vecs.append(np.asarray(v, dtype=complex))
    vecs = np.broadcast_arrays(*vecs)
    V = np.stack(vecs, axis=-2)
    # Gp[i, j] = v_i^H v_j
    Gp = np.conj(linalg.gram(V))
    lam, E = np.linalg.eigh(Gp)
    lam_max = lam[..., -1:]
    keep = lam > rtol * np.where(lam_max > 0, lam_max, 1.0)
    # coordinates of v_j in the orthonormal basis: C[k, j] = sqrt(lam_k) conj(E[j, k])
    C = np.sqrt(np.where(keep, lam, 0.0))[..., :, None] * np.conj(np.swapaxes(E, -1, -2))
    m = V.shape[-2]
    B = _col(shift, 2) * (keep[..., :, None] & np.eye(m, dtype=bool))
    for t in T.terms:
        p, q = C[..., :, index[id(t.left)]], C[..., :, index[id(t.right)]]
        B = B + _col(t.coeff, 2) * (p[..., :, None] * np.conj(q)[..., None, :])
    if T.structurally_hermitian():
        block = np.max(np.abs(np.linalg.eigvalsh(B)), axis=-1)
    else:
        block = np.linalg.svd(B, compute_uv=False)[..., 0]
    rank = keep.sum(axis=-1)
    rest = np.where(rank < T.dim, np.abs(shift), 0.0)
    return np.maximum(block, rest)


def _scalar_out(x):
    return x.item() if isinstance(x, np.ndarray) and x.ndim == 0 else x


def is_self_adjoint(T: StructuredOperator, policy: TolerancePolicy = DEFAULT_POLICY):
    D = T.to_float().dense
    scale = np.max(np.abs(D), axis=(-2, -1))
    diff = np.max(np.abs(D - np.conj(np.swapaxes(D, -1, -2))), axis=(-2, -1))
    return _scalar_out(diff <= policy.tolerance(scale))


def is_positive(T: StructuredOperator, policy: TolerancePolicy = DEFAULT_POLICY):
    """Self-adjoint with smallest eigenvalue ``>= -tolerance``."""
    D = T.to_float().dense
    scale = np.max(np.abs(D), axis=(-2, -1))
    H = 0.5 * (D + np.conj(np.swapaxes(D, -1, -2)))
    lo = np.linalg.eigvalsh(H)[..., 0]
    ok = np.asarray(is_self_adjoint(T, policy)) & (lo >= -policy.tolerance(scale))
    return _scalar_out(ok)
