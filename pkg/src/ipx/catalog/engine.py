"""Generic machinery behind the inequality registry.

An entry is data: an input signature (vectors, vector sets, families of
sets, scalar parameters) and a chain function returning real expressions
``e_0 <= e_1 <= ... <= e_m``. Everything here works on batches: a *case*
is a dict of arrays with a leading sample axis.

Sampling and search share one map, :meth:`Entry.build`, from unconstrained
*raw* coordinates to a case that satisfies the signature. Fuzzing draws
Gaussian raw coordinates; the tightness search perturbs them.
"""

from __future__ import annotations

import math
import zlib
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .. import linalg
from ..errors import BackendError, ConstraintError, DimensionError, InfeasibleConstraints
from ..linalg import NONZERO, REAL, UNIT, InnerEqualsOne, NotProportionalTo, OrthogonalTo
from ..scalars import DEFAULT_POLICY, GaussianRational, TolerancePolicy, to_complex

CHUNK = 8192
MAX_ATTEMPTS = 100


# -- signature ------------------------------------------------------------


@dataclass(frozen=True)
class Orth:
    """Orthogonal to another input (a vector, or every member of a set)."""

    ref: str


@dataclass(frozen=True)
class InnerOne:
    """``<v, ref> = 1``."""

    ref: str


@dataclass(frozen=True)
class InnerUnimodular:
    """``|<v, ref>| = 1``; the phase is taken from the raw draw."""

    ref: str


@dataclass(frozen=True)
class NotProp:
    """Not proportional to ``ref`` (relative threshold 1e-6)."""

    ref: str


@dataclass(frozen=True)
class Vector:
    name: str
    constraints: tuple = ()

    @property
    def real(self):
        return REAL in self.constraints


@dataclass(frozen=True)
class VectorSet:
    """A finite set of nonzero vectors, stored as an array ``(N, k, dim)``."""

    name: str
    sizes: tuple = (1, 2, 3, 4, 5)
    below_dim: bool = False  # the set must leave a nonzero orthogonal complement
    real: bool = False

    def feasible_sizes(self, dim):
        return tuple(k for k in self.sizes if not self.below_dim or k < dim)


@dataclass(frozen=True)
class Family:
    """A list of vector sets ``Z_1, ..., Z_n``; a shape is the tuple of sizes."""

    name: str
    shapes: tuple = ((1,), (2,), (1, 1), (2, 1), (1, 3), (1, 1, 1), (2, 1, 2))


@dataclass(frozen=True)
class Param:
    """A scalar (or, with ``family``, one scalar per family member).

    ``draw(rng, n, count)`` returns raw values; ``project(raw, case)`` maps
    them into the admissible region and may read parameters declared
    earlier (identity by default).
    """

    name: str
    draw: Callable
    project: Callable | None = None
    family: str | None = None


@dataclass(frozen=True)
class Entry:
    id: str
    quote: str
    inputs: tuple
    chain: Callable
    links: tuple
    params: tuple = ()
    requires: tuple = ()  # (description, predicate(case, policy) -> mask)
    min_dim: int = 1
    real: bool = False
    note: str = ""
    debug: bool = False

    # -- shapes -----------------------------------------------------------

    def shapes(self, dim):
        """Admissible set/family sizes in ``dim``; one dict per sub-batch."""
        out = [{}]
        for inp in self.inputs:
            if isinstance(inp, VectorSet):
                opts = inp.feasible_sizes(dim)
            elif isinstance(inp, Family):
                opts = inp.shapes
            else:
                continue
            out = [{**s, inp.name: o} for s in out for o in opts]
        return out if dim >= self.min_dim else []

    def feasible(self, dim):
        return bool(self.shapes(dim))

    # -- raw coordinates -----------------------------------------------

    def draw_raw(self, rng, n, dim, shape):
        raw = {}
        for inp in self.inputs:
            if isinstance(inp, Vector):
                raw[inp.name] = linalg.gaussian(rng, (n, dim), inp.real)
            elif isinstance(inp, VectorSet):
                raw[inp.name] = linalg.gaussian(rng, (n, shape[inp.name], dim), inp.real)
            elif isinstance(inp, Family):
                raw[inp.name] = [linalg.gaussian(rng, (n, k, dim)) for k in shape[inp.name]]
        for p in self.params:
            count = len(shape[p.family]) if p.family else None
            raw[p.name] = np.asarray(p.draw(rng, n, count), dtype=complex)
        return raw

    def build(self, raw):
        """Map raw coordinates onto the signature (deterministic)."""
        case = {}
        sets = {i.name for i in self.inputs if isinstance(i, VectorSet)}
        for inp in self.inputs:
            r = raw[inp.name]
            if isinstance(inp, Vector):
                case[inp.name] = _enforce(r, inp, case, sets)
            elif isinstance(inp, VectorSet):
                case[inp.name] = r.real.astype(complex) if inp.real else r
            else:
                case[inp.name] = list(r)
        for p in self.params:
            case[p.name] = p.project(raw[p.name], case) if p.project else raw[p.name]
        return case

    def admissible(self, case, policy=DEFAULT_POLICY, strict=True):
        """Mask of samples meeting every side condition."""
        sets = {i.name for i in self.inputs if isinstance(i, VectorSet)}
        n = _batch_len(case, self)
        ok = np.ones(n, dtype=bool)
        thr = linalg.NONZERO_THRESHOLD if strict else policy.eps_abs
        for inp in self.inputs:
            v = case[inp.name]
            if isinstance(inp, Vector):
                cons = _resolve(inp, case, sets)
                ok &= linalg.satisfies(v, cons, policy, strict=strict)
                for c in inp.constraints:
                    if isinstance(c, InnerUnimodular):
                        ip = np.abs(linalg.inner(v, case[c.ref]))
                        sc = np.sqrt(linalg.norm_sq(v) * linalg.norm_sq(case[c.ref]))
                        ok &= np.abs(ip - 1.0) <= policy.tolerance(sc)
            elif isinstance(inp, VectorSet):
                ok &= np.all(np.sqrt(linalg.norm_sq(v)) > thr, axis=-1)
            else:
                for Z in v:
                    ok &= np.all(np.sqrt(linalg.norm_sq(Z)) > thr, axis=-1)
        for _, pred in self.requires:
            ok &= np.asarray(pred(case, policy), dtype=bool)
        return ok

    def values(self, case):
        """Chain values, shape ``(m + 1, N)``."""
        with np.errstate(all="ignore"):
            vals = [np.real(np.asarray(v, dtype=complex)) for v in self.chain(case)]
        n = _batch_len(case, self)
        return np.stack([np.broadcast_to(v, (n,)) for v in vals]).astype(float)

    def sample(self, rng, n, dim, shape, max_attempts=MAX_ATTEMPTS):
        """``n`` admissible cases; failing samples are redrawn."""
        case = self.build(self.draw_raw(rng, n, dim, shape))
        bad = ~self.admissible(case)
        attempts = 1
        while bad.any():
            if attempts >= max_attempts:
                raise InfeasibleConstraints(
                    f"{self.id}: constraints infeasible in dim {dim} after {max_attempts} attempts"
                )
            idx = np.flatnonzero(bad)
            fresh = self.build(self.draw_raw(rng, idx.size, dim, shape))
            _assign(case, fresh, idx)
            bad[idx] = ~self.admissible(fresh)
            attempts += 1
        return case


def _batch_len(case, entry):
    for inp in entry.inputs:
        v = case[inp.name]
        if isinstance(inp, Family):
            return v[0].shape[0]
        return v.shape[0]
    return np.shape(case[entry.params[0].name])[0]


def _assign(case, fresh, idx):
    for k, v in fresh.items():
        if isinstance(v, list):
            for dst, src in zip(case[k], v):
                dst[idx] = src
        else:
            case[k][idx] = v


def _resolve(inp, case, sets):
    out = []
    for c in inp.constraints:
        if isinstance(c, Orth):
            out.append(OrthogonalTo(case[c.ref], span=c.ref in sets))
        elif isinstance(c, InnerOne):
            out.append(InnerEqualsOne(case[c.ref]))
        elif isinstance(c, NotProp):
            out.append(NotProportionalTo(case[c.ref]))
        elif isinstance(c, InnerUnimodular):
            continue
        else:
            out.append(c)
    return tuple(out)


def _enforce(raw, inp, case, sets):
    v = linalg.enforce(raw, _resolve(inp, case, sets))
    for c in inp.constraints:
        if isinstance(c, InnerUnimodular):
            t = case[c.ref]
            ip = linalg.inner(v, t)
            mod = np.abs(ip)
            target = np.where(mod > 0, ip / np.where(mod > 0, mod, 1.0), 1.0)
            nt = linalg.norm_sq(t)
            v = v + ((target - ip) / np.where(nt > 0, nt, 1.0))[..., None] * t
    return v


# -- results --------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    entry_id: str
    values: tuple
    violations: tuple  # (link index, excess) pairs
    passed: bool
    tightness: float
    link_tightness: tuple


@dataclass(frozen=True)
class FuzzSummary:
    entry_id: str
    samples: int
    max_excess: float
    max_tightness: float
    seed: int
    passed: bool
    violations: int = 0
    dims: tuple = ()

    def merge(self, other: "FuzzSummary") -> "FuzzSummary":
        return FuzzSummary(
            self.entry_id,
            self.samples + other.samples,
            max(self.max_excess, other.max_excess),
            max(self.max_tightness, other.max_tightness),
            self.seed,
            self.passed and other.passed,
            self.violations + other.violations,
            tuple(sorted(set(self.dims) | set(other.dims))),
        )


def link_tightness(lo, hi, guard=0.0):
    """Ratio for one link ``lo <= hi``; 1 means equality, above 1 a violation.

    ``hi > 0``: ``lo / hi``. ``hi < 0``: ``hi / lo`` (or ``inf`` if
    ``lo >= 0``). ``hi == 0``: 0 unless ``lo > 0`` (then ``inf``). Pairs with
    both magnitudes at most ``guard`` count as 0/0.
    """
    lo, hi = np.asarray(lo, dtype=float), np.asarray(hi, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        pos = lo / np.where(hi > 0, hi, 1.0)
        neg = np.where(lo < 0, hi / np.where(lo < 0, lo, -1.0), np.inf)
        zero = np.where(lo > 0, np.inf, 0.0)
        r = np.where(hi > 0, pos, np.where(hi < 0, neg, zero))
    tiny = (np.abs(lo) <= guard) & (np.abs(hi) <= guard)
    return np.where(tiny, 0.0, r)


def assess(values, policy: TolerancePolicy = DEFAULT_POLICY):
    """Per-sample link analysis of chain values ``(m + 1, N)``.

    Returns ``(violation mask (m, N), excess (m, N), tightness (m, N))``.
    The excess is how far ``lo - hi`` overshoots the tolerance, divided by
    ``max(1, scale)``; it is positive exactly on violations.
    """
    finite = np.all(np.isfinite(values), axis=0)
    v = np.where(finite, values, 0.0)
    scale = np.max(np.abs(v), axis=0)
    diff = v[:-1] - v[1:]
    over = diff - policy.tolerance(scale)
    viol = (over > 0) | ~finite
    excess = np.where(finite, over / np.maximum(1.0, scale), np.inf)
    guard = policy.eps_abs * np.maximum(1.0, scale)
    tight = link_tightness(v[:-1], v[1:], guard)
    tight = np.where(finite, tight, np.inf)
    return viol, excess, tight


# -- registry operations ---------------------------------------------------


def _to_float(v, exact_seen, float_seen):
    if isinstance(v, (list, tuple)):
        return [_to_float(e, exact_seen, float_seen) for e in v]
    if isinstance(v, np.ndarray) and v.dtype == object:
        exact_seen.append(True)
        return to_complex(v)
    if isinstance(v, GaussianRational):
        exact_seen.append(True)
        return complex(v)
    if isinstance(v, np.ndarray):
        float_seen.append(True)
        return v.astype(complex)
    if isinstance(v, (float, complex, np.floating, np.complexfloating)):
        float_seen.append(True)
    return np.asarray(v, dtype=complex)


def prepare(entry: Entry, case: dict):
    """Validate shapes/backends of a single user case and add a batch axis."""
    exact_seen, float_seen = [], []
    out = {}
    names = [i.name for i in entry.inputs] + [p.name for p in entry.params]
    missing = [n for n in names if n not in case]
    if missing:
        raise ConstraintError(f"{entry.id}: missing inputs {missing}")
    dims = set()
    for inp in entry.inputs:
        v = case[inp.name]
        if isinstance(inp, Vector):
            a = _to_float(v, exact_seen, float_seen)
            a = np.asarray(a)
            if a.ndim != 1:
                raise DimensionError(f"{inp.name} must be a vector")
            dims.add(a.shape[-1])
            out[inp.name] = a[None]
        elif isinstance(inp, VectorSet):
            a = np.asarray(_to_float(list(v), exact_seen, float_seen), dtype=complex)
            if a.ndim != 2 or a.shape[0] == 0:
                raise DimensionError(f"{inp.name} must be a nonempty list of vectors")
            dims.add(a.shape[-1])
            out[inp.name] = a[None]
        else:
            sets = []
            for Z in v:
                a = np.asarray(_to_float(list(Z), exact_seen, float_seen), dtype=complex)
                if a.ndim != 2 or a.shape[0] == 0:
                    raise DimensionError(f"{inp.name}: each member must be a nonempty list of vectors")
                dims.add(a.shape[-1])
                sets.append(a[None])
            if not sets:
                raise ConstraintError(f"{inp.name} must contain at least one set")
            out[inp.name] = sets
    for p in entry.params:
        a = np.asarray(_to_float(case[p.name], exact_seen, float_seen), dtype=complex)
        if p.family:
            if a.ndim != 1 or a.size != len(out[p.family]):
                raise ConstraintError(f"{p.name} needs one value per member of {p.family}")
        elif a.ndim != 0:
            raise ConstraintError(f"{p.name} must be a scalar")
        out[p.name] = a[None]
    if exact_seen and float_seen:
        raise BackendError("backend mismatch: exact and float inputs mixed")
    if len(dims) > 1:
        raise DimensionError(f"dimension mismatch: {sorted(dims)}")
    return out


def evaluate_entry(entry: Entry, case: dict, policy: TolerancePolicy = DEFAULT_POLICY) -> CheckResult:
    batch = prepare(entry, case)
    if not entry.admissible(batch, policy, strict=False)[0]:
        failed = [d for d, pred in entry.requires if not np.asarray(pred(batch, policy))[0]]
        detail = f" ({'; '.join(failed)})" if failed else ""
        raise ConstraintError(f"{entry.id}: input violates the entry's side conditions{detail}")
    vals = entry.values(batch)
    viol, _, tight = assess(vals, policy)
    violations = tuple(
        (i, float((vals[i, 0] - vals[i + 1, 0]))) for i in range(vals.shape[0] - 1) if viol[i, 0]
    )
    lt = tuple(float(t) for t in tight[:, 0])
    return CheckResult(
        entry.id,
        tuple(float(v) for v in vals[:, 0]),
        violations,
        not violations,
        max(lt) if lt else 0.0,
        lt,
    )


def chunk_seed(seed, entry_id, dim, shape_idx, chunk):
    return np.random.SeedSequence([int(seed), zlib.crc32(entry_id.encode()), int(dim), int(shape_idx), int(chunk)])


def fuzz_entry(entry: Entry, n, dims, seed, policy: TolerancePolicy = DEFAULT_POLICY) -> FuzzSummary:
    """``n`` samples per dimension, split evenly over the admissible shapes."""
    if n < 1:
        raise ValueError("n must be >= 1")
    dims = tuple(int(d) for d in dims)
    if not dims:
        raise ValueError("dims must be nonempty")
    bad = [d for d in dims if not entry.feasible(d)]
    if bad:
        raise InfeasibleConstraints(f"{entry.id} is infeasible in dims {bad} (needs dim >= {entry.min_dim})")
    total = 0
    max_excess, max_tight, nviol = -math.inf, 0.0, 0
    for dim in dims:
        shapes = entry.shapes(dim)
        per = [n // len(shapes) + (1 if i < n % len(shapes) else 0) for i in range(len(shapes))]
        for si, (shape, m) in enumerate(zip(shapes, per)):
            for ci, start in enumerate(range(0, m, CHUNK)):
                size = min(CHUNK, m - start)
                rng = np.random.default_rng(chunk_seed(seed, entry.id, dim, si, ci))
                case = entry.sample(rng, size, dim, shape)
                viol, excess, tight = assess(entry.values(case), policy)
                total += size
                nviol += int(np.any(viol, axis=0).sum())
                max_excess = max(max_excess, float(np.max(excess)))
                max_tight = max(max_tight, float(np.max(tight)))
    return FuzzSummary(entry.id, total, max_excess, max_tight, int(seed), nviol == 0, nviol, dims)
