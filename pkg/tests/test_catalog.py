import numpy as np
import pytest

from ipx import catalog, linalg, operators
from ipx.catalog import evaluate, feasible_dims, fuzz, get_entry, link_tightness, list_entries
from ipx.errors import BackendError, ConstraintError, DimensionError, InfeasibleConstraints
from ipx.linalg import vec
from ipx.scalars import gr

S2 = 1 / np.sqrt(2)
E1, E2 = np.array([1.0, 0.0]), np.array([0.0, 1.0])
DIAG = np.array([S2, S2])


def test_registry_shape():
    entries = list_entries()
    ids = [e.id for e in entries]
    assert len(ids) == 42
    assert len(set(ids)) == len(ids)
    assert "RICHARD" in ids and "DEBUG_FALSE" not in ids
    assert "DEBUG_FALSE" in [e.id for e in list_entries(include_debug=True)]
    assert all(e.quote for e in entries)
    with pytest.raises(KeyError):
        get_entry("NO_SUCH_ID")


@pytest.mark.parametrize("entry", list_entries(), ids=lambda e: e.id)
def test_links_match_chain(entry):
    dim = entry.min_dim + 1
    rng = np.random.default_rng(0)
    case = entry.sample(rng, 4, dim, entry.shapes(dim)[0])
    vals = entry.values(case)
    assert vals.shape == (len(entry.links) + 1, 4)


def test_evaluate_richard_equality():
    r = evaluate("RICHARD", {"a": E1, "b": E2, "x": DIAG})
    assert r.passed
    assert r.values == pytest.approx((0.5, 0.5))
    assert r.tightness == pytest.approx(1.0)


def test_evaluate_lupu_equality():
    r = evaluate("LUPU", {"a": E1, "b": E2, "x": E1})
    assert r.passed and r.values == pytest.approx((1.0, 1.0))


def test_evaluate_ostrowski_discrete():
    r = evaluate("OSTROWSKI_DISCRETE", {"x": E1, "y": E2, "z": E1})
    assert r.passed and r.values == pytest.approx((1.0, 1.0))


def test_evaluate_rem_23():
    r = evaluate("REM_23", {"a": E1, "b": E1, "x": DIAG})
    assert r.passed
    assert r.values == pytest.approx((0.0, 0.25, 0.5))


def test_evaluate_prec_gen():
    r = evaluate("PREC_GEN", {"a": DIAG, "b": np.array([S2, -S2]), "w": E1, "z": E2})
    assert r.passed
    assert r.values == pytest.approx((0.0, 0.5), abs=1e-15)


def test_evaluate_accepts_exact_inputs():
    e1, e2 = vec([1, 0], exact=True), vec([0, 1], exact=True)
    r = evaluate("LUPU", {"a": e1, "b": e2, "x": e1})
    assert r.passed and r.tightness == pytest.approx(1.0)
    r = evaluate("KDM_16", {"a": e1, "b": e2, "x": e1, "alpha": gr(2), "beta": gr(1)})
    assert r.passed


def test_evaluate_errors():
    with pytest.raises(ConstraintError):
        evaluate("RICHARD", {"a": E1, "b": E2})
    with pytest.raises(DimensionError):
        evaluate("CS", {"x": E1, "y": np.ones(3)})
    with pytest.raises(BackendError):
        evaluate("CS", {"x": vec([1, 0], exact=True), "y": E1})
    with pytest.raises(ConstraintError, match="side conditions"):
        evaluate("RICHARD", {"a": 1j * E1, "b": E2, "x": DIAG})
    with pytest.raises(ConstraintError):
        evaluate("SANDWICH_15", {"a": E1, "x": E1, "alpha": 1.5, "beta": 1.0})
    with pytest.raises(KeyError):
        evaluate("NO_SUCH_ID", {})


def test_link_tightness_cases():
    lo = np.array([1.0, -2.0, 1.0, 0.0, 1.0, -1.0, 1e-15])
    hi = np.array([2.0, -1.0, -1.0, 0.0, 0.0, 0.0, 1e-15])
    t = link_tightness(lo, hi, guard=1e-12)
    np.testing.assert_array_equal(t, [0.5, 0.5, np.inf, 0.0, np.inf, 0.0, 0.0])


def test_fuzz_cs_all_dims():
    s = fuzz("CS", 1000, range(1, 9), seed=3)
    assert s.passed and s.samples == 8000 and s.max_excess <= 0


def test_fuzz_th21():
    assert fuzz("TH_21", 1000, range(2, 7), seed=3).passed


def test_fuzz_richard_near_equality():
    s = fuzz("RICHARD", 100_000, [2], seed=1)
    assert s.passed and s.max_tightness >= 0.999


def test_fuzz_deterministic():
    a = fuzz("BUZANO", 500, [2, 3], seed=11)
    b = fuzz("BUZANO", 500, [2, 3], seed=11)
    c = fuzz("BUZANO", 500, [2, 3], seed=12)
    assert a == b
    assert a.max_tightness != c.max_tightness


def test_fuzz_detects_false_chain():
    s = fuzz("DEBUG_FALSE", 200, [2], seed=0)
    assert not s.passed and s.violations == 200 and s.max_excess > 0


def test_infeasible_dims():
    assert feasible_dims("PROP_EORTH", range(1, 4)) == [2, 3]
    with pytest.raises(InfeasibleConstraints):
        fuzz("PROP_EORTH", 10, [1], seed=0)


# -- cross-entry consistency on shared random cases ------------------------


def _real_triple(rng, n, dim):
    a, b = linalg.gaussian(rng, (2, n, dim), real=True)
    x = linalg.enforce(linalg.gaussian(rng, (n, dim), real=True), (linalg.UNIT,))
    return {"a": a, "b": b, "x": x}


def test_richard_is_half_kdm17_at_alpha_two(rng):
    c = _real_triple(rng, 200, 3)
    rich = get_entry("RICHARD").values(c)
    kdm = get_entry("KDM_17").values({**c, "alpha": np.full(200, 2.0 + 0j)})
    np.testing.assert_allclose(kdm, 2 * rich, rtol=1e-12, atol=1e-12)


def test_cor19_is_th18_at_equal_parameters(rng):
    c = dict(zip("abx", linalg.gaussian(rng, (3, 200, 4))))
    cor = get_entry("COR_19").values(c)
    al = linalg.gaussian(rng, 200)
    th = get_entry("TH_18").values({**c, "alpha": al, "beta": al})
    np.testing.assert_allclose(th, np.abs(al) ** 2 * cor, rtol=1e-10, atol=1e-12)


def test_buzano_from_prec_gen2(rng):
    n, dim = 200, 4
    a, b, x, z = linalg.gaussian(rng, (4, n, dim))
    z = linalg.project_out(z, b)
    buz = get_entry("BUZANO").values({"a": a, "b": b, "x": x})
    prec = get_entry("PREC_GEN2").values({"a": a, "b": b, "w": x, "z": z})
    np.testing.assert_allclose(buz, linalg.norm_sq(x) * prec, rtol=1e-10, atol=1e-12)


def test_richard_selberg_matches_richard(rng):
    c = _real_triple(rng, 200, 3)
    rs = get_entry("RICHARD_SELBERG").values(c)
    np.testing.assert_allclose(rs, get_entry("RICHARD").values(c), rtol=1e-12, atol=1e-12)
    tg = get_entry("TH_GEN").values({"a": c["a"], "b": c["b"], "Z": c["x"][:, None, :]})
    np.testing.assert_allclose(tg, rs, rtol=1e-12, atol=1e-12)


def test_ostrowski_ip_matches_dragomir_gosa_on_unit_inner_product(rng):
    e = get_entry("OSTROWSKI_IP")
    c = e.sample(rng, 200, 3, e.shapes(3)[0])
    np.testing.assert_allclose(np.abs(linalg.inner(c["a"], c["b"])), 1.0)
    np.testing.assert_allclose(get_entry("DRAGOMIR_GOSA").values(c), e.values(c), rtol=1e-10)


def test_prod_richard_literal_reading_fails():
    # with (-1)^n prod z_k = +2^(n-1) and T = prod z_k S_k, n = 1 forces z = -1
    S = operators.selberg([E1])
    T = operators.combine([(-1.0, S)])
    lhs = abs(T.form(E1, E1) - 0.5 * linalg.inner(E1, E1))
    assert lhs == pytest.approx(1.5) and lhs > 0.5
    # the implemented reading is the identity-shifted product, here T = S
    r = evaluate("PROD_RICHARD", {"a": E1, "b": E1, "Zs": [[E1]], "zk": np.array([1.0])})
    assert r.passed and r.tightness == pytest.approx(1.0)
