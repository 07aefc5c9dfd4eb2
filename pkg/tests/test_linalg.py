import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from ipx import linalg
from ipx.errors import BackendError, DimensionError, InfeasibleConstraints
from ipx.linalg import (
    NONZERO,
    REAL,
    UNIT,
    InnerEqualsOne,
    NotProportionalTo,
    OrthogonalTo,
    defect,
    gram,
    inner,
    norm,
    norm_sq,
    project_out,
    project_out_span,
    sample,
    satisfies,
    vec,
)
from ipx.scalars import gr

comp = st.complex_numbers(max_magnitude=1e3, allow_nan=False, allow_infinity=False)


def cvec(n):
    return arrays(np.complex128, (n,), elements=comp)


def test_inner_convention():
    # linear in the first slot, conjugate-linear in the second
    x, y = vec([1j, 0]), vec([1, 0])
    assert inner(x, y) == 1j
    assert inner(y, x) == -1j
    assert inner(2j * x, y) == 2j * inner(x, y)
    assert inner(x, 2j * y) == -2j * inner(x, y)


def test_exact_inner_and_norm():
    x = vec([gr(3), gr(0, 4)], exact=True)
    assert norm_sq(x) == 25
    assert norm(x) == 5
    y = vec(["1/2", gr(0, 1)], exact=True)
    assert inner(x, y) == gr("3/2") + gr(0, 4) * gr(0, -1)


def test_mismatch_errors():
    with pytest.raises(DimensionError):
        inner(vec([1, 2]), vec([1, 2, 3]))
    with pytest.raises(BackendError):
        inner(vec([1, 2]), vec([1, 2], exact=True))
    with pytest.raises(DimensionError):
        gram([vec([1, 2]), vec([1])])


def test_gram_frozen():
    G = gram(np.array([[1, 1j], [1, 0]]))
    np.testing.assert_allclose(G, [[2, 1], [1, 1]])


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(cvec(n), cvec(n))))
def test_cauchy_schwarz_and_defect(pair):
    x, y = pair
    lhs = abs(inner(x, y))
    rhs = float(norm(x) * norm(y))
    assert lhs <= rhs * (1 + 1e-12) + 1e-12
    d = defect(x, y)
    ref = norm_sq(x) * norm_sq(y) - abs(inner(x, y)) ** 2
    assert d >= 0
    assert abs(d - ref) <= 1e-9 * max(1.0, norm_sq(x) * norm_sq(y))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(cvec(n), cvec(n))))
def test_gram_is_hermitian_psd(pair):
    G = gram(np.stack(pair))
    np.testing.assert_allclose(G, G.conj().T)
    scale = max(1.0, float(np.abs(G).max()))
    assert np.linalg.eigvalsh(G).min() >= -1e-9 * scale


def test_project_out(rng):
    y, z = linalg.gaussian(rng, (2, 4))
    r = project_out(y, z)
    assert abs(inner(r, z)) < 1e-12
    Z = linalg.gaussian(rng, (3, 5))
    Z[2] = Z[0] + Z[1]  # rank deficient
    v = project_out_span(linalg.gaussian(rng, 5), Z)
    assert np.abs(Z.conj() @ v).max() < 1e-12


def test_enforce_constraints(rng):
    z = linalg.gaussian(rng, 4, real=True)
    # the targets must be orthogonal for both constraints to hold at once
    y = project_out(linalg.gaussian(rng, 4, real=True), z)
    cons = (REAL, OrthogonalTo(z.real), InnerEqualsOne(y.real), NotProportionalTo(y.real))
    v = sample(4, cons, seed=3, size=100)
    assert satisfies(v, cons).all()
    u = sample(3, (UNIT, OrthogonalTo([z[:3]])), seed=1)
    assert abs(norm(u) - 1) < 1e-12 and abs(inner(u, z[:3])) < 1e-12


def test_sample_is_deterministic():
    a = sample(5, (NONZERO,), seed=9, size=4)
    b = sample(5, (NONZERO,), seed=9, size=4)
    np.testing.assert_array_equal(a, b)


def test_infeasible_constraints():
    e = vec([1.0])
    with pytest.raises(InfeasibleConstraints):
        sample(1, (NONZERO, OrthogonalTo(e)), seed=0)


def test_random_unitary(rng):
    for d in (1, 2, 5):
        U = linalg.random_unitary(d, rng)
        np.testing.assert_allclose(U.conj().T @ U, np.eye(d), atol=1e-12)


def test_random_exact_is_exact(rng):
    v = linalg.random_exact(rng, 4, real=True)
    assert linalg.is_exact_array(v) and linalg.is_real(v)
