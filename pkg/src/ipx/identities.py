"""Instance-wise verification of the polynomial identities.

Every identity is evaluated in a square-root-free form (norms appear only
squared, denominators are cleared), so on the exact backend the residual
``lhs - rhs`` is a Gaussian rational that must be exactly zero. The same
code runs on double-precision inputs, where the residual is compared with
the tolerance policy instead.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BackendError, ConstraintError
from .linalg import inner, is_real, norm_sq, random_exact
from .scalars import DEFAULT_POLICY, GaussianRational, TolerancePolicy, abs2, to_complex

IDENTITY_IDS = ("LAGRANGE", "ID_AUX", "ID_10", "ID_12", "ID_13", "RESIDUAL", "SCALAR_MAX")

# Short human-readable labels; reports carry these next to each id.
DESCRIPTIONS = {
    "LAGRANGE": "Lagrange's identity for two real n-tuples",
    "ID_AUX": "decomposition of |x + alpha y|^2 along and across y",
    "ID_10": "norm identity for alpha<a,x>x - beta|x|^2 a (residual form)",
    "ID_12": "norm identity for alpha<a,x>x - beta|x|^2 a (expanded form)",
    "ID_13": "|<a,x>x - |x|^2 a / 2| = |x|^2 |a| / 2",
    "RESIDUAL": "Pythagoras for the residual |x|a - (<a,x>/|x|)x",
    "SCALAR_MAX": "p p1 + q q1 <= max(p, q)(p1 + q1) for nonnegative reals",
}

SIGNATURES = {
    "LAGRANGE": ("a", "b"),
    "ID_AUX": ("x", "y", "alpha"),
    "ID_10": ("a", "x", "alpha", "beta"),
    "ID_12": ("a", "x", "alpha", "beta"),
    "ID_13": ("a", "x"),
    "RESIDUAL": ("a", "x"),
    "SCALAR_MAX": ("p", "q", "p1", "q1"),
}


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    digest: str
    residual: object
    scale: float
    exact: bool
    passed: bool

    @property
    def exact_pass(self) -> bool:
        return self.exact and self.passed


def _kind(v):
    if isinstance(v, np.ndarray):
        return "exact" if v.dtype == object else "float"
    if isinstance(v, (GaussianRational, Fraction)):
        return "exact"
    if isinstance(v, (bool, np.bool_)):
        raise TypeError("boolean input")
    if isinstance(v, (int, np.integer)):
        return None
    return "float"


def _backend(inputs):
    kinds = {_kind(v) for v in inputs.values()} - {None}
    if len(kinds) > 1:
        raise BackendError("backend mismatch: exact and float inputs mixed")
    return kinds.pop() if kinds else "exact"


def _normalize(inputs, backend):
    out = {}
    for k, v in inputs.items():
        if isinstance(v, np.ndarray):
            out[k] = v
        elif backend == "exact":
            out[k] = GaussianRational.coerce(v)
        else:
            out[k] = complex(v)
    return out


def _re(z):
    if isinstance(z, GaussianRational):
        return z.re
    if isinstance(z, Fraction):
        return z
    return float(np.real(z))


def _half(backend):
    return GaussianRational(Fraction(1, 2)) if backend == "exact" else 0.5


def _nonzero(v, name):
    if norm_sq(v) == 0:
        raise ConstraintError(f"{name} must be nonzero")


# Each side function returns (lhs, rhs) as real numbers.


def _lagrange(a, b, **_):
    if not (is_real(a) and is_real(b)):
        raise ConstraintError("Lagrange's identity needs real tuples")
    a = [_re(v) for v in a]
    b = [_re(v) for v in b]
    n = len(a)
    lhs = sum(v * v for v in a) * sum(v * v for v in b)
    cross = sum(
        (a[i] * b[j] - a[j] * b[i]) ** 2 for i in range(n) for j in range(i + 1, n)
    )
    rhs = sum(u * v for u, v in zip(a, b)) ** 2 + cross
    return lhs, rhs


def _aux(x, y, alpha, **_):
    _nonzero(y, "y")
    ny = norm_sq(y)
    c = inner(x, y)
    lhs = ny * ny * norm_sq(x + alpha * y)
    rhs = ny * abs2(alpha * ny + c) + norm_sq(ny * x - c * y)
    return lhs, rhs


def _combo(a, x, alpha, beta):
    return alpha * inner(a, x) * x - beta * norm_sq(x) * a


def _id10(a, x, alpha, beta, **_):
    _nonzero(x, "x")
    nx = norm_sq(x)
    c = inner(a, x)
    lhs = norm_sq(_combo(a, x, alpha, beta))
    rhs = nx * abs2(c) * abs2(beta - alpha) + abs2(beta) * norm_sq(nx * a - c * x)
    return lhs, rhs


def _id12(a, x, alpha, beta, **_):
    nx, na = norm_sq(x), norm_sq(a)
    c2 = abs2(inner(a, x))
    lhs = norm_sq(_combo(a, x, alpha, beta))
    rhs = nx * (abs2(alpha - beta) * c2 + abs2(beta) * na * nx - abs2(beta) * c2)
    return lhs, rhs


def _id13(a, x, _backend, **_):
    h = _half(_backend)
    lhs = norm_sq(inner(a, x) * x - h * norm_sq(x) * a)
    rhs = _re(h * h) * norm_sq(x) ** 2 * norm_sq(a)
    return lhs, rhs


def _residual(a, x, **_):
    _nonzero(x, "x")
    nx = norm_sq(x)
    lhs = norm_sq(nx * a - inner(a, x) * x)
    rhs = nx * (norm_sq(a) * nx - abs2(inner(a, x)))
    return lhs, rhs


def _scalar_max(p, q, p1, q1, **_):
    p, q, p1, q1 = (_re(v) for v in (p, q, p1, q1))
    if min(p, q, p1, q1) < 0:
        raise ConstraintError("p, q, p1, q1 must be nonnegative")
    return p * p1 + q * q1, max(p, q) * (p1 + q1)


_SIDES = {
    "LAGRANGE": _lagrange,
    "ID_AUX": _aux,
    "ID_10": _id10,
    "ID_12": _id12,
    "ID_13": _id13,
    "RESIDUAL": _residual,
    "SCALAR_MAX": _scalar_max,
}


def scalar_max_inputs(a, x, alpha, beta):
    """The substitution turning the max-lemma into the upper norm bound."""
    c2 = abs2(inner(a, x))
    return {
        "p": abs2(alpha - beta),
        "q": abs2(beta),
        "p1": c2,
        "q1": norm_sq(a) * norm_sq(x) - c2,
    }


def digest(inputs) -> str:
    def canon(v):
        if isinstance(v, np.ndarray):
            return [canon(e) for e in v.tolist()] if v.dtype != object else [repr(e) for e in v.flat]
        return repr(v)

    text = repr(sorted((k, canon(v)) for k, v in inputs.items()))
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def identity_sides(identity_id, inputs):
    """Return ``(lhs, rhs, backend)`` for one instance."""
    if identity_id not in _SIDES:
        raise KeyError(f"unknown identity {identity_id!r}")
    need = set(SIGNATURES[identity_id])
    if identity_id == "SCALAR_MAX" and not need <= set(inputs) and {"a", "x", "alpha", "beta"} <= set(inputs):
        inputs = {**inputs, **scalar_max_inputs(inputs["a"], inputs["x"], inputs["alpha"], inputs["beta"])}
    missing = need - set(inputs)
    if missing:
        raise ConstraintError(f"{identity_id} needs inputs {sorted(need)}; missing {sorted(missing)}")
    backend = _backend({k: inputs[k] for k in need})
    args = _normalize({k: inputs[k] for k in need}, backend)
    vecs = [v for v in args.values() if isinstance(v, np.ndarray)]
    if len({v.shape[-1] for v in vecs}) > 1:
        raise ConstraintError("signature mismatch: vector dimensions differ")
    lhs, rhs = _SIDES[identity_id](_backend=backend, **args)
    return lhs, rhs, backend


def check_identity(identity_id, inputs, policy: TolerancePolicy = DEFAULT_POLICY) -> IdentityReport:
    """Evaluate one identity instance and report its residual.

    For ``SCALAR_MAX`` (an inequality) the check is ``lhs <= rhs``; all other
    ids require ``lhs == rhs``.
    """
    lhs, rhs, backend = identity_sides(identity_id, inputs)
    ineq = identity_id == "SCALAR_MAX"
    if backend == "exact":
        res = GaussianRational.coerce(lhs) - GaussianRational.coerce(rhs)
        if ineq:
            ok = res.im == 0 and res.re <= 0
        else:
            ok = res.is_zero()
        scale = float(max(abs(_re(lhs)), abs(_re(rhs))))
        return IdentityReport(identity_id, digest(inputs), res, scale, True, bool(ok))
    lhs, rhs = float(np.real(lhs)), float(np.real(rhs))
    scale = max(abs(lhs), abs(rhs))
    res = lhs - rhs
    ok = policy.le(lhs, rhs, scale) if ineq else policy.eq(lhs, rhs, scale)
    return IdentityReport(identity_id, digest(inputs), res, scale, False, bool(ok))


def random_inputs(identity_id, rng, dim, zero_beta=False):
    """A random Gaussian-rational instance for ``identity_id``."""
    vec = lambda real=False: random_exact(rng, dim, real=real)
    scal = lambda: random_exact(rng, ())
    if identity_id == "LAGRANGE":
        return {"a": vec(True), "b": vec(True)}
    if identity_id == "ID_AUX":
        return {"x": vec(), "y": _nz(rng, dim), "alpha": scal()}
    if identity_id in ("ID_10", "ID_12"):
        beta = GaussianRational(0) if zero_beta else scal()
        return {"a": vec(), "x": _nz(rng, dim), "alpha": scal(), "beta": beta}
    if identity_id == "ID_13":
        return {"a": vec(), "x": vec()}
    if identity_id == "RESIDUAL":
        return {"a": vec(), "x": _nz(rng, dim)}
    if identity_id == "SCALAR_MAX":
        return scalar_max_inputs(vec(), vec(), scal(), scal())
    raise KeyError(identity_id)


def _nz(rng, dim):
    while True:
        v = random_exact(rng, dim)
        if norm_sq(v) != 0:
            return v


def to_float(inputs):
    """Round every exact input to double precision."""
    out = {}
    for k, v in inputs.items():
        if isinstance(v, np.ndarray):
            out[k] = to_complex(v)
        elif isinstance(v, Fraction):
            out[k] = float(v)
        elif isinstance(v, GaussianRational):
            out[k] = complex(v)
        else:
            out[k] = v
    return out


def lower_bound_gap(a, x, alpha, beta):
    """``|alpha<a,x>x - beta|x|^2 a|^2 - |x|^2 |<a,x>|^2 |beta - alpha|^2``.

    Nonnegative by the residual-form identity (the dropped term is a
    squared norm); exact on exact inputs.
    """
    return norm_sq(_combo(a, x, alpha, beta)) - norm_sq(x) * abs2(inner(a, x)) * abs2(beta - alpha)
