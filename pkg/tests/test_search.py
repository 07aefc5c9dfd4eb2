import numpy as np
import pytest

from ipx.catalog import evaluate
from ipx.errors import ConstraintError, InfeasibleConstraints
from ipx.search import certify_equality, tightness_search

S2 = 1 / np.sqrt(2)
E1, E2 = np.array([1.0, 0.0]), np.array([0.0, 1.0])


def test_cs_reaches_equality():
    r = tightness_search("CS", 0, dim=3, budget=200, seed=42)
    assert r.best_tightness >= 0.9999


def test_richard_and_selberg():
    assert tightness_search("RICHARD", 0, dim=2, budget=200, seed=42).best_tightness >= 0.999
    r = tightness_search("SELBERG", 0, dim=2, budget=200, seed=42, shape=1)
    assert r.shape == {"Z": 1} and r.best_tightness >= 0.999


def test_argmax_reevaluates():
    r = tightness_search("BUZANO", 0, dim=3, budget=50, seed=1)
    again = evaluate("BUZANO", r.argmax)
    assert abs(again.link_tightness[0] - r.best_tightness) <= 1e-9


def test_trajectory_is_monotone_and_deterministic():
    a = tightness_search("PROP_25", 0, dim=2, budget=30, seed=3)
    b = tightness_search("PROP_25", 0, dim=2, budget=30, seed=3)
    assert a.trajectory == b.trajectory and a.best_tightness == b.best_tightness
    assert all(u <= v for u, v in zip(a.trajectory, a.trajectory[1:]))
    assert a.iterations <= 500


def test_search_errors():
    with pytest.raises(IndexError):
        tightness_search("CS", 3)
    with pytest.raises(InfeasibleConstraints):
        tightness_search("PROP_EORTH", 0, dim=1)
    with pytest.raises(ValueError):
        tightness_search("CS", 0, budget=0)


def test_certify_forced_example():
    c = certify_equality(E1, E2, [np.array([S2, S2])])
    assert c.holds and c.theta == pytest.approx(0.0) and c.residual < 1e-15


def test_certify_rejects_non_equality():
    c = certify_equality(E1, E2, [E1])
    assert not c.holds and c.residual == pytest.approx(S2)


def test_certify_dependent_case():
    c = certify_equality(E1, E1, [E1])
    assert c.holds and c.theta == 0.0


def test_certify_phase():
    # rotate b by a phase; the certificate recovers it
    phi = 1.2
    c = certify_equality(E1, np.exp(-1j * phi) * E2, [np.array([S2, S2])])
    assert c.holds and c.theta == pytest.approx(phi)


def test_certify_errors():
    with pytest.raises(ConstraintError):
        certify_equality(E1, E2, [])
    with pytest.raises(ConstraintError):
        certify_equality(0 * E1, E2, [E1])
