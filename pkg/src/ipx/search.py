"""Extremal tightness search and equality certificates.

The search maximises the ratio of one chain link over admissible inputs.
It draws a batch of random starts, keeps the best, then runs a
derivative-free coordinate ascent on the raw coordinates (the unconstrained
parametrisation the sampler also uses). Every trial point is mapped back
onto the constraints before it is scored. Inadmissible points score -inf.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg, operators
from .catalog import get_entry
from .catalog.engine import Family, VectorSet, assess
from .errors import ConstraintError, InfeasibleConstraints
from .scalars import DEFAULT_POLICY, TolerancePolicy

MAX_LOCAL_ITERATIONS = 500
MIN_STEP = 1e-8
START_STEP = 0.25


@dataclass(frozen=True)
class SearchResult:
    entry_id: str
    link: int
    best_tightness: float
    argmax: dict
    iterations: int
    seed: int
    dim: int
    shape: dict
    trajectory: tuple


@dataclass(frozen=True)
class EqualityCertificate:
    holds: bool
    theta: float
    residual: float


# -- raw coordinate packing ---------------------------------------------------


def _pieces(raw, keys):
    out = []
    for k in keys:
        v = raw[k]
        out.extend(v if isinstance(v, list) else [v])
    return out


def _flatten(raw, keys):
    parts = []
    for a in _pieces(raw, keys):
        a = a.reshape(a.shape[0], -1)
        parts += [a.real, a.imag]
    return np.concatenate(parts, axis=1)


def _unflatten(X, template, keys):
    n = X.shape[0]
    out, pos = {}, 0
    for k in keys:
        v = template[k]
        items = v if isinstance(v, list) else [v]
        rebuilt = []
        for a in items:
            size = int(np.prod(a.shape[1:]))
            re = X[:, pos : pos + size]
            im = X[:, pos + size : pos + 2 * size]
            pos += 2 * size
            rebuilt.append((re + 1j * im).reshape((n,) + a.shape[1:]))
        out[k] = rebuilt if isinstance(v, list) else rebuilt[0]
    return out


def _case_row(case, i):
    row = {}
    for k, v in case.items():
        if isinstance(v, list):
            row[k] = [np.array(Z[i]) for Z in v]
        else:
            a = np.array(v[i])
            row[k] = a.item() if a.ndim == 0 else a
    return row


def _shape_for(entry, dim, shape):
    shapes = entry.shapes(dim)
    if not shapes:
        raise InfeasibleConstraints(f"{entry.id} is infeasible in dim {dim}")
    if shape is None:
        return shapes[0]
    if not isinstance(shape, dict):
        names = [i.name for i in entry.inputs if isinstance(i, (VectorSet, Family))]
        if len(names) != 1:
            raise ValueError("shape must be a dict naming each set or family")
        shape = {names[0]: shape}
    if shape not in shapes:
        raise InfeasibleConstraints(f"shape {shape} is not admissible for {entry.id} in dim {dim}")
    return shape


def tightness_search(
    entry_id,
    link=0,
    dim=2,
    budget=200,
    seed=42,
    shape=None,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> SearchResult:
    """Maximise the tightness ratio of ``link`` for ``entry_id`` in ``dim``.

    ``shape`` fixes the set/family sizes; by default the smallest admissible
    sizes are used (so a single set has one member).
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    entry = get_entry(entry_id)
    if not 0 <= link < len(entry.links):
        raise IndexError(f"{entry_id} has links 0..{len(entry.links) - 1}, got {link}")
    shape = _shape_for(entry, dim, shape)
    rng = np.random.default_rng(seed)
    template = entry.draw_raw(rng, budget, dim, shape)
    keys = list(template)

    def score(X):
        case = entry.build(_unflatten(X, template, keys))
        ok = entry.admissible(case, policy)
        _, _, tight = assess(entry.values(case), policy)
        t = tight[link]
        return np.where(ok & np.isfinite(t), t, -np.inf), case

    X = _flatten(template, keys)
    s, _ = score(X)
    if not np.isfinite(s).any():
        raise InfeasibleConstraints(f"no admissible start for {entry_id} in dim {dim}")
    i = int(np.argmax(s))
    x, best = X[i : i + 1].copy(), float(s[i])
    trajectory = [best]
    step, iterations = START_STEP, 0
    P = x.shape[1]
    eye = np.eye(P)
    while step >= MIN_STEP and iterations < MAX_LOCAL_ITERATIONS:
        trial = np.concatenate([x + step * eye, x - step * eye])
        ts, _ = score(trial)
        j = int(np.argmax(ts))
        if ts[j] > best:
            x, best = trial[j : j + 1], float(ts[j])
        else:
            step /= 2
        iterations += 1
        trajectory.append(best)
    final, case = score(x)
    return SearchResult(
        entry_id,
        link,
        float(final[0]),
        _case_row(case, 0),
        iterations,
        int(seed),
        int(dim),
        dict(shape),
        tuple(trajectory),
    )


def certify_equality(a, b, Z, policy: TolerancePolicy = DEFAULT_POLICY) -> EqualityCertificate:
    """Test ``S_Z a = a/2 + (|a| / (2|b|)) e^{i theta} b`` for some theta.

    ``theta`` is the argument of ``<S_Z a - a/2, b>`` in ``[0, 2 pi)`` (0 if
    that inner product vanishes). If ``S_Z a - a/2`` is zero the equation
    cannot hold for nonzero ``a`` and the residual is ``|a|/2``.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    zs = [np.asarray(z, dtype=complex) for z in Z]
    if not zs:
        raise ConstraintError("Z must be nonempty")
    na, nb = float(linalg.norm(a)), float(linalg.norm(b))
    if na == 0 or nb == 0:
        raise ConstraintError("a and b must be nonzero")
    S = operators.selberg(zs)
    d = S.apply(a) - 0.5 * a
    g = complex(linalg.inner(d, b))
    theta = float(np.angle(g)) % (2 * np.pi) if g != 0 else 0.0
    target = 0.5 * na / nb * np.exp(1j * theta) * b
    residual = float(linalg.norm(d - target))
    return EqualityCertificate(bool(residual <= policy.tolerance(na)), theta, residual)
