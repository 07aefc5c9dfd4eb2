"""Registry of inequality entries: listing, single-case evaluation, fuzzing."""

from __future__ import annotations

from ..scalars import DEFAULT_POLICY, TolerancePolicy
from .engine import (
    CheckResult,
    Entry,
    Family,
    FuzzSummary,
    InnerOne,
    InnerUnimodular,
    NotProp,
    Orth,
    Param,
    Vector,
    VectorSet,
    assess,
    evaluate_entry,
    fuzz_entry,
    link_tightness,
)
from .entries import DEBUG_ENTRIES, ENTRIES

_REGISTRY = {e.id: e for e in ENTRIES + DEBUG_ENTRIES}

__all__ = [
    "CheckResult",
    "Entry",
    "FuzzSummary",
    "list_entries",
    "get_entry",
    "evaluate",
    "fuzz",
    "feasible_dims",
    "link_tightness",
    "assess",
]


def list_entries(include_debug=False):
    """All registry entries in a fixed order (debug entries only on request)."""
    return list(ENTRIES + (DEBUG_ENTRIES if include_debug else ()))


def get_entry(entry_id) -> Entry:
    try:
        return _REGISTRY[entry_id]
    except KeyError:
        raise KeyError(f"unknown entry id {entry_id!r}") from None


def evaluate(entry_id, case, policy: TolerancePolicy = DEFAULT_POLICY) -> CheckResult:
    """Check one case; side-condition violations raise ``ConstraintError``."""
    return evaluate_entry(get_entry(entry_id), case, policy)


def fuzz(entry_id, n, dims, seed=0, policy: TolerancePolicy = DEFAULT_POLICY) -> FuzzSummary:
    """Sample ``n`` admissible cases per dimension and check the chain."""
    return fuzz_entry(get_entry(entry_id), n, dims, seed, policy)


def feasible_dims(entry_id, dims):
    e = get_entry(entry_id)
    return [d for d in dims if e.feasible(d)]
