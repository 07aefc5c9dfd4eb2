from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ipx.errors import BackendError, NonFiniteComparison
from ipx.scalars import (
    DEFAULT_POLICY,
    GaussianRational,
    TolerancePolicy,
    abs2,
    approx_eq,
    approx_le,
    exact_eq,
    exact_sqrt,
    gr,
    is_exact,
    to_complex,
)

fracs = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)
grs = st.builds(GaussianRational, fracs, fracs)


def test_basic_arithmetic():
    z = gr(1, 2) * gr(3, -1)
    assert z == gr(5, 5)
    assert gr(1, 1) / gr(0, 1) == gr(1, -1)
    assert gr("1/2") + 1 == gr("3/2")
    assert 1 - gr(0, 1) == gr(1, -1)
    assert gr(3, 4).abs2() == 25
    assert gr(2, -3).conjugate() == gr(2, 3)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        gr(1) / gr(0)


def test_floats_are_not_promoted():
    with pytest.raises(BackendError):
        GaussianRational.coerce(0.5)
    with pytest.raises(TypeError):
        gr(1) + 0.5
    with pytest.raises(BackendError):
        gr(0.5)


def test_hash_matches_fraction_for_real_values():
    assert hash(gr(Fraction(3, 4))) == hash(Fraction(3, 4))
    assert gr(2) == 2
    assert len({gr(1, 1), gr(1, 1), gr(1)}) == 2


def test_repr_and_complex():
    assert repr(gr(1, 2)) == "GR(1, 2)"
    assert repr(gr("1/3")) == "GR(1/3)"
    assert complex(gr("1/4", -2)) == 0.25 - 2j


def test_is_exact_and_abs2():
    assert is_exact(gr(1)) and is_exact(3) and is_exact(Fraction(1, 2))
    assert not is_exact(1.0) and not is_exact(True)
    arr = np.array([gr(1), gr(0, 2)], dtype=object)
    assert is_exact(arr)
    assert not is_exact(np.array([1.0]))
    assert list(abs2(arr)) == [1, 4]
    assert abs2(3 + 4j) == 25.0
    assert np.allclose(to_complex(arr), [1, 2j])


def test_exact_sqrt():
    assert exact_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    with pytest.raises(BackendError):
        exact_sqrt(Fraction(2))
    with pytest.raises(ValueError):
        exact_sqrt(Fraction(-1))


def test_exact_eq_rejects_floats():
    assert exact_eq(gr(1, 0), 1)
    with pytest.raises(BackendError):
        exact_eq(gr(1), 1.0)


@settings(max_examples=200, deadline=None)
@given(grs, grs, grs)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a * b).abs2() == a.abs2() * b.abs2()
    if not b.is_zero():
        assert (a / b) * b == a


@settings(max_examples=200, deadline=None)
@given(grs)
def test_float_shadow(a):
    assert abs(complex(a * a) - complex(a) ** 2) <= 1e-9 * max(1.0, abs(complex(a)) ** 2)


def test_tolerance_policy():
    p = TolerancePolicy(1e-9, 1e-12)
    assert p.tolerance(0.0) == pytest.approx(1e-9 + 1e-12)
    assert p.tolerance(1e6) == pytest.approx(1e-3 + 1e-12)
    assert approx_le(1.0 + 5e-10, 1.0)
    assert not approx_le(1.0 + 5e-9, 1.0)
    assert approx_eq(1e6, 1e6 + 1e-4, scale=1e6)
    np.testing.assert_array_equal(approx_le(np.array([0.0, 2.0]), 1.0), [True, False])
    with pytest.raises(ValueError):
        TolerancePolicy(0.0, 1e-12)


@pytest.mark.parametrize("bad", [np.nan, np.inf, -np.inf])
def test_non_finite_comparison(bad):
    with pytest.raises(NonFiniteComparison):
        approx_le(bad, 1.0)
    with pytest.raises(NonFiniteComparison):
        DEFAULT_POLICY.eq(1.0, bad, 1.0)
