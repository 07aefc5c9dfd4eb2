import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ipx import linalg, operators
from ipx.errors import BackendError, ConstraintError, DimensionError
from ipx.linalg import vec
from ipx.operators import (
    combine,
    compose,
    identity,
    is_positive,
    is_self_adjoint,
    rank_one,
    selberg,
    selberg_weights,
    spectral_norm,
    spectral_norm_dense,
)
from ipx.scalars import gr


def half_shifted(S):
    return combine([(1.0 if not S.exact else gr(1), S)], shift=-0.5 if not S.exact else gr(-1, 0) / 2)


def test_rank_one_action():
    x, y = vec([1, 2j]), vec([1j, 1])
    T = rank_one(x, y)
    z = vec([3, -1])
    np.testing.assert_allclose(T(z), linalg.inner(z, y) * x)
    np.testing.assert_allclose(T.dense, np.outer(x, y.conj()))
    assert spectral_norm(T) == pytest.approx(float(linalg.norm(x) * linalg.norm(y)))


def test_identity_and_shift():
    T = combine([(2.0, rank_one(vec([1, 0]), vec([1, 0])))], shift=-1.0)
    np.testing.assert_allclose(T.dense, np.diag([1, -1]))
    assert spectral_norm(identity(3)) == 1.0
    assert identity(2, exact=True).dense[1, 1] == 1


def test_selberg_frozen_example():
    # Z = {(1,0), (1,1)}: d = (2, 3)
    Z = [vec([1, 0]), vec([1, 1])]
    np.testing.assert_allclose(selberg_weights(Z), [2, 3])
    S = selberg(Z)
    expected = np.array([[1 / 2 + 1 / 3, 1 / 3], [1 / 3, 1 / 3]])
    np.testing.assert_allclose(S.dense, expected)


def test_selberg_exact():
    Z = [vec([1, 0], exact=True), vec([1, 1], exact=True)]
    S = selberg(Z)
    assert S.exact
    assert S.dense[0, 0] == gr(5, 0) / 6
    with pytest.raises(BackendError):
        # |<z1, z2>| = sqrt(2) is irrational
        selberg([vec([1, 0], exact=True), vec([1, gr(0, 1)], exact=True), vec([gr(1), gr(1, 1)], exact=True)])


def test_selberg_rejects_empty_and_zero():
    with pytest.raises(ConstraintError):
        selberg([])
    with pytest.raises(ConstraintError):
        selberg([vec([0, 0])])


def test_dimension_and_backend_mismatch():
    with pytest.raises(DimensionError):
        combine([(1.0, identity(2)), (1.0, identity(3))])
    with pytest.raises(DimensionError):
        compose(identity(2), identity(3))
    with pytest.raises(BackendError):
        rank_one(vec([1, 0]), vec([1, 0], exact=True))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(1, 5), st.integers(0, 2**32 - 1))
def test_selberg_positive_contraction(dim, k, seed):
    rng = np.random.default_rng(seed)
    S = selberg(list(linalg.gaussian(rng, (k, dim))))
    assert is_self_adjoint(S) and is_positive(S)
    assert spectral_norm(S) <= 1 + 1e-9
    R = combine([(2.0, S)], shift=-1.0)
    assert spectral_norm(R) <= 1 + 1e-9


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_structured_norm_matches_dense(dim, k, seed):
    rng = np.random.default_rng(seed)
    parts = [(complex(*rng.standard_normal(2)), rank_one(*linalg.gaussian(rng, (2, dim)))) for _ in range(k)]
    T = combine(parts, shift=complex(*rng.standard_normal(2)))
    s, d = spectral_norm(T), spectral_norm_dense(T)
    assert abs(s - d) <= 1e-8 * max(1.0, d)


def test_batched_norms(rng):
    Z = linalg.gaussian(rng, (50, 3, 4))
    S = selberg(Z)
    np.testing.assert_allclose(spectral_norm(S), spectral_norm_dense(S), atol=1e-10)


def test_compose_matches_dense(rng):
    T = combine([(1.5, rank_one(*linalg.gaussian(rng, (2, 4))))], shift=0.3j)
    U = selberg(list(linalg.gaussian(rng, (2, 4))))
    np.testing.assert_allclose(compose(T, U).dense, T.dense @ U.dense, atol=1e-12)


def test_adjoint(rng):
    T = combine([(1j, rank_one(*linalg.gaussian(rng, (2, 3))))], shift=2 - 1j)
    np.testing.assert_allclose(T.adjoint().dense, T.dense.conj().T)
    assert not is_self_adjoint(T)


def _rational_set(rng, k, dim):
    # real rational vectors keep every |<z_i, z_j>| rational
    while True:
        Z = [linalg.random_exact(rng, dim, real=True) for _ in range(k)]
        if all(linalg.norm_sq(z) != 0 for z in Z):
            return Z


def test_factorization_exact_correct_order(rng):
    for _ in range(10):
        dim = int(rng.integers(1, 4))
        S1 = selberg(_rational_set(rng, int(rng.integers(1, 3)), dim))
        S2 = selberg(_rational_set(rng, int(rng.integers(1, 3)), dim))
        lhs = combine([(gr(1), S1), (gr(1), S2), (gr(-2), compose(S2, S1))], shift=gr(-1, 0) / 2)
        rhs = combine([(gr(-2), compose(half_shifted(S2), half_shifted(S1)))])
        assert (lhs.dense == rhs.dense).all()


def test_factorization_literal_order_needs_commuting(rng):
    # S1 + S2 - 2 S2 S1 - I/2 = -2 (S1 - I/2)(S2 - I/2) only when S1, S2 commute
    e1, e2 = vec([1, 0]), vec([0, 1])
    S1, S2 = selberg([e1]), selberg([e2])
    lhs = combine([(1.0, S1), (1.0, S2), (-2.0, compose(S2, S1))], shift=-0.5)
    rhs = combine([(-2.0, compose(half_shifted(S1), half_shifted(S2)))])
    np.testing.assert_allclose(lhs.dense, rhs.dense, atol=1e-15)
    S1, S2 = selberg([vec([1, 0])]), selberg([vec([1, 1])])
    lhs = combine([(1.0, S1), (1.0, S2), (-2.0, compose(S2, S1))], shift=-0.5)
    rhs = combine([(-2.0, compose(half_shifted(S1), half_shifted(S2)))])
    commutator = S1.dense @ S2.dense - S2.dense @ S1.dense
    np.testing.assert_allclose(lhs.dense - rhs.dense, 2 * commutator, atol=1e-15)
    assert np.abs(commutator).max() == pytest.approx(0.5)


def test_projection_norm_closed_form(rng):
    for _ in range(50):
        x = linalg.sample(4, (linalg.UNIT,), seed=int(rng.integers(2**31)))
        al, be = complex(*rng.standard_normal(2)), complex(*rng.standard_normal(2))
        T = combine([(al, rank_one(x, x))], shift=-be)
        assert spectral_norm(T) == pytest.approx(max(abs(al - be), abs(be)), abs=1e-12)
