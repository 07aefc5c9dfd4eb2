"""The registry: one :class:`Entry` per inequality.

Notation inside the chain functions: ``c`` is a batched case dict,
``ip(u, v) = <u, v>``, ``n2(u) = |u|^2``, ``nm(u) = |u|`` and
``cs(u, v) = |u|^2 |v|^2 - |<u, v>|^2`` (the Cauchy-Schwarz gap).
"""

from __future__ import annotations

import numpy as np

from .. import linalg, operators
from ..linalg import NONZERO, REAL, UNIT
from .engine import Entry, Family, InnerOne, InnerUnimodular, NotProp, Orth, Param, Vector, VectorSet

ip = linalg.inner
n2 = linalg.norm_sq


def nm(u):
    return np.sqrt(n2(u))


def cs(u, v):
    return linalg.defect(u, v)


def _sqrt(t):
    return np.sqrt(np.maximum(t, 0.0))


# -- parameter regions ------------------------------------------------------

RADIUS = 3.0
BETA_MIN = 0.05


def disk(rng, n, count=None, radius=RADIUS):
    shape = (n,) if count is None else (n, count)
    r = radius * np.sqrt(rng.random(shape))
    return r * np.exp(2j * np.pi * rng.random(shape))


def annulus(rng, n, count=None):
    """Uniform on ``BETA_MIN <= |z| <= RADIUS``."""
    shape = (n,) if count is None else (n, count)
    lo, hi = BETA_MIN**2, RADIUS**2
    r = np.sqrt(lo + (hi - lo) * rng.random(shape))
    return r * np.exp(2j * np.pi * rng.random(shape))


def kdm_alpha(rng, n, count=None):
    """Disk draws, with a quarter of the samples pinned at alpha = 2."""
    a = disk(rng, n)
    return np.where(rng.random(n) < 0.25, 2.0 + 0j, a)


def simplex(rng, n, count):
    return rng.exponential(size=(n, count)).astype(complex)


def to_simplex(raw, case=None):
    w = np.abs(raw)
    s = w.sum(axis=-1, keepdims=True)
    return np.where(s > 0, w / np.where(s > 0, s, 1.0), 1.0 / w.shape[-1]).astype(complex)


def product_weights(raw, case=None):
    """Rescale so that ``(-1)^n prod z_k = -2^(n-1)``; the phase of the
    last weight absorbs the difference."""
    n = raw.shape[-1]
    head = raw[..., :-1]
    p = np.prod(head, axis=-1)
    target = -((-1.0) ** n) * 2.0 ** (n - 1)
    safe = np.where(p != 0, p, 1.0)
    last = np.where(p != 0, target / safe, 0.0)
    return np.concatenate([head, last[..., None]], axis=-1)


A1 = Param("alpha", disk)
B1 = Param("beta", disk)
BNZ = Param("beta", annulus)


def _beta_nonzero(c, pol):
    return np.abs(c["beta"]) > 0


def _mx(al, be):
    return np.maximum(np.abs(al - be), np.abs(be))


# -- shared expressions -------------------------------------------------------


def combo(c, a="a", x="x"):
    """``alpha <a,x> x - beta |x|^2 a``."""
    al, be = c["alpha"][:, None], c["beta"][:, None]
    A, X = c[a], c[x]
    return al * ip(A, X)[:, None] * X - be * n2(X)[:, None] * A


def big_a(c, al, be):
    """``A(alpha, beta)``; ``al``/``be`` are arrays or numbers."""
    a, b, x = c["a"], c["b"], c["x"]
    t = np.abs(al) * np.abs(ip(a, x)) * _sqrt(cs(x, b)) - np.abs(be) * n2(x) * _sqrt(cs(a, b))
    return t * t


def richard_lhs(c):
    a, b, x = c["a"], c["b"], c["x"]
    return np.abs(ip(a, x) * ip(x, b) - 0.5 * n2(x) * ip(a, b))


def selberg_form(Z, a, b):
    """``<S_Z a, b>``."""
    return operators.selberg(Z).form(a, b)


def prec_middle(c):
    a, b, w, z = c["a"], c["b"], c["w"], c["z"]
    return (
        ip(a, w) * ip(w, b) / n2(w)
        + ip(a, z) * ip(z, b) / n2(z)
        - 2 * ip(a, w) * ip(w, z) * ip(z, b) / (n2(w) * n2(z))
    )


def _half_shifted(c, k):
    """``S_{Z_k} - I/2`` as a structured operator."""
    S = operators.selberg(c["Zs"][k])
    return operators.combine([(1.0, S)], shift=-0.5)


def weighted_sum_op(c, shift_half):
    """``sum_k z_k S_k`` (minus ``(sum_k z_k) I/2`` if ``shift_half``)."""
    parts, total = [], 0
    for k, Z in enumerate(c["Zs"]):
        zk = c["zk"][:, k]
        parts.append((zk, operators.selberg(Z)))
        total = total - 0.5 * zk
    return operators.combine(parts, shift=total if shift_half else 0)


def product_op(c):
    """``prod_k z_k (S_k - I/2)``, composed left to right."""
    T = None
    for k in range(len(c["Zs"])):
        U = operators.combine([(c["zk"][:, k], _half_shifted(c, k))])
        T = U if T is None else operators.compose(T, U)
    return T


# -- chains ---------------------------------------------------------------


def ch_cs_discrete(c):
    a, b = c["a"].real, c["b"].real
    return [np.sum(a * b, -1) ** 2, np.sum(a * a, -1) * np.sum(b * b, -1)]


def ch_ostrowski_discrete(c):
    x, y, z = c["x"].real, c["y"].real, c["z"].real
    sxx, syy, sxy = np.sum(x * x, -1), np.sum(y * y, -1), np.sum(x * y, -1)
    return [syy / np.sum(z * z, -1), sxx * syy - sxy**2]


def ch_cs(c):
    return [np.abs(ip(c["x"], c["y"])), nm(c["x"]) * nm(c["y"])]


def ch_buzano(c):
    a, b, x = c["a"], c["b"], c["x"]
    return [np.abs(ip(a, x) * ip(x, b)), 0.5 * n2(x) * (np.abs(ip(a, b)) + nm(a) * nm(b))]


def ch_richard(c):
    a, b, x = c["a"], c["b"], c["x"]
    return [richard_lhs(c), 0.5 * n2(x) * nm(a) * nm(b)]


def ch_precupanu(c):
    a, b = c["a"], c["b"]
    ab, nab = ip(a, b).real, nm(a) * nm(b)
    return [(ab - nab) / 2, prec_middle(c).real, (ab + nab) / 2]


def ch_popa_rasa(c):
    a, b, x = c["a"], c["b"], c["x"]
    t = ip(a, x) * ip(x, b) - 0.5 * n2(x) * ip(a, b)
    return [np.abs(t.real), 0.5 * n2(x) * _sqrt(n2(a) * n2(b) - ip(a, b).imag ** 2)]


def ch_lupu(c):
    a, b, x = c["a"], c["b"], c["x"]
    ab, bx, xa = ip(a, b), ip(b, x), ip(x, a)
    lhs = n2(a) * np.abs(bx) ** 2 + n2(b) * np.abs(xa) ** 2 + n2(x) * np.abs(ab) ** 2
    return [lhs, n2(a) * n2(b) * n2(x) + 2 * np.abs(ab * bx * xa)]


def ch_lupu_refinement(c):
    a, b, x = c["a"], c["b"], c["x"]
    mid = (nm(a) * np.abs(ip(b, x)) - nm(b) * np.abs(ip(x, a))) ** 2 / n2(x)
    return [np.zeros_like(mid), mid, cs(a, b)]


def ch_lower_11(c):
    a, x = c["a"], c["x"]
    return [nm(x) * np.abs(ip(a, x)) * np.abs(c["beta"] - c["alpha"]), nm(combo(c))]


def ch_upper_14(c):
    return [nm(combo(c)), _mx(c["alpha"], c["beta"]) * nm(c["a"]) * n2(c["x"])]


def ch_sandwich_15(c):
    a, x = c["a"], c["x"]
    mid = nm(combo(c)) / (np.abs(c["alpha"] - c["beta"]) * nm(x))
    return [np.abs(ip(a, x)), mid, nm(a) * nm(x)]


def _kdm(c, al, be):
    a, b, x = c["a"], c["b"], c["x"]
    lhs = np.abs(al * ip(a, x) * ip(x, b) - be * n2(x) * ip(a, b))
    return [lhs, _mx(al, be) * n2(x) * nm(a) * nm(b)]


def ch_kdm_16(c):
    return _kdm(c, c["alpha"], c["beta"])


def ch_kdm_17(c):
    return _kdm(c, c["alpha"], 1.0)


def _th18(c, al, be):
    a, b, x = c["a"], c["b"], c["x"]
    mid = n2(x) / n2(b) * np.abs(al * ip(a, x) * ip(x, b) / n2(x) - be * ip(a, b)) ** 2
    rhs = np.abs(al - be) ** 2 * np.abs(ip(a, x)) ** 2 + np.abs(be) ** 2 * cs(a, x)
    return [np.zeros_like(mid), mid, rhs]


def ch_th_18(c):
    return _th18(c, c["alpha"], c["beta"])


def ch_cor_19(c):
    a, b, x = c["a"], c["b"], c["x"]
    mid = n2(x) / n2(b) * np.abs(ip(a, x) * ip(x, b) / n2(x) - ip(a, b)) ** 2
    return [np.zeros_like(mid), mid, cs(a, x)]


def ch_dragomir_gosa(c):
    a, b, x = c["a"], c["b"], c["x"]
    return [n2(x) / n2(b) * np.abs(ip(a, b)) ** 2, cs(a, x)]


def ch_ostrowski_ip(c):
    a, b, x = c["a"], c["b"], c["x"]
    return [n2(x) / n2(b), cs(a, x)]


def ch_th_21(c):
    a, b, x = c["a"], c["b"], c["x"]
    al, be = c["alpha"], c["beta"]
    mb = np.abs(be)
    lhs = mb * n2(x) * nm(a) * nm(b) - np.abs(al * ip(a, x) * ip(x, b) - be * n2(x) * ip(a, b))
    bound = (mb**2 - np.abs(al - be) ** 2) * nm(b) * np.abs(ip(a, x)) ** 2 / (2 * mb * nm(a))
    return [np.zeros_like(lhs), bound, lhs]


def _th22_parts(c, al, be):
    a, b, x = c["a"], c["b"], c["x"]
    m = _mx(al, be)
    big = n2(x) * nm(a) * nm(b)
    gap = m * big - np.abs(al * ip(a, x) * ip(x, b) - be * n2(x) * ip(a, b))
    return gap, big_a(c, al, be) / (2 * m * big)


def ch_th_22(c):
    gap, bound = _th22_parts(c, c["alpha"], c["beta"])
    return [np.zeros_like(gap), bound, gap]


def ch_rem_23(c):
    gap, bound = _th22_parts(c, 1.0, 0.5)
    return [np.zeros_like(gap), bound, gap]


def ch_cor_24(c):
    a, b, x = c["a"], c["b"], c["x"]
    al, be = c["alpha"], c["beta"]
    m = _mx(al, be)
    big = n2(x) * nm(a) * nm(b)
    k = big_a(c, al, be) / (2 * m * big)
    base = np.abs(be) * n2(x) * np.abs(ip(a, b))
    mid = np.abs(al) * np.abs(ip(a, x) * ip(x, b))
    return [base - m * big + k, mid, base + m * big - k]


def ch_prop_25(c):
    a, b, x = c["a"], c["b"], c["x"]
    big = n2(x) * nm(a) * nm(b)
    k = np.maximum(big_a(c, 1.0, 0.5), 0.25 * big_a(c, 2.0, 1.0)) / big
    rhs = n2(x) * (0.5 * np.abs(ip(a, b)) + 0.5 * nm(a) * nm(b)) - k
    return [np.abs(ip(a, x) * ip(x, b)), rhs]


def ch_opnorm_26(c):
    a, b, x = c["a"], c["b"], c["x"]
    al, be = c["alpha"], c["beta"]
    T = operators.combine([(al, operators.rank_one(x, x))], shift=-be * n2(x))
    return [np.abs(T.form(a, b)), _mx(al, be) * n2(x) * nm(a) * nm(b)]


def ch_fujii_kubo(c):
    x = c["x"]
    T = operators.combine([(2.0, operators.rank_one(x, x))], shift=-1.0)
    s = operators.spectral_norm(T)
    return [s, np.ones_like(s)]


def ch_selberg(c):
    x, Z = c["x"], c["Z"]
    d = operators.selberg_weights(Z)
    lhs = np.sum(np.abs(np.einsum("nd,nkd->nk", x, np.conj(Z))) ** 2 / d, axis=-1)
    return [lhs, n2(x)]


def ch_selberg_cs_ref(c):
    a, b = c["a"], c["b"]
    ra = n2(a) - selberg_form([b], a, a).real
    rb = n2(b) - selberg_form([a], b, b).real
    return [np.zeros_like(ra), ra * rb, n2(b) * ra, n2(a) * n2(b) - np.abs(ip(a, b)) ** 2]


def ch_richard_selberg(c):
    a, b = c["a"], c["b"]
    lhs = np.abs(selberg_form([c["x"]], a, b) - 0.5 * ip(a, b))
    return [lhs, 0.5 * nm(a) * nm(b)]


def ch_lemma_prev(c):
    a, b, Z = c["a"], c["b"], c["Z"]
    S = operators.selberg(Z)
    sab = S.form(a, b)
    root = _sqrt(S.form(a, a).real) * _sqrt(S.form(b, b).real)
    e1 = np.abs(ip(a, b) - sab) + root
    e2 = np.abs(ip(a, b)) - np.abs(sab) + root
    return [np.abs(ip(a, b)), e2, e1, nm(a) * nm(b)]


def ch_th_gen(c):
    a, b = c["a"], c["b"]
    return [np.abs(selberg_form(c["Z"], a, b) - 0.5 * ip(a, b)), 0.5 * nm(a) * nm(b)]


def _eorth(c, sab):
    a, b, e = c["a"], c["b"], c["e"]
    aeeb = ip(a, e) * ip(e, b)
    lhs = np.abs(sab - 0.5 * ip(a, b))
    mid = np.abs(sab - 0.5 * ip(a, b) + 0.5 * aeeb) + 0.5 * np.abs(aeeb)
    return [lhs, mid, 0.5 * nm(a) * nm(b)]


def ch_prop_eorth(c):
    return _eorth(c, selberg_form(c["Z"], c["a"], c["b"]))


def ch_ref_cs_dragomir(c):
    a, b, e = c["a"], c["b"], c["e"]
    aeeb = ip(a, e) * ip(e, b)
    return [np.abs(ip(a, b)), np.abs(ip(a, b) - aeeb) + np.abs(aeeb), nm(a) * nm(b)]


def ch_cor_richard_ref(c):
    return _eorth(c, ip(c["a"], c["x"]) * ip(c["x"], c["b"]))


def ch_cor_buzano_selberg(c):
    a, b, e = c["a"], c["b"], c["e"]
    sab = selberg_form(c["Z"], a, b)
    aeeb = ip(a, e) * ip(e, b)
    mid = np.abs(sab - 0.5 * ip(a, b) + 0.5 * aeeb) + np.abs(0.5 * aeeb) + 0.5 * np.abs(ip(a, b))
    return [np.abs(sab), mid, 0.5 * (np.abs(ip(a, b)) + nm(a) * nm(b))]


def ch_prec_gen(c):
    a, b = c["a"], c["b"]
    return [np.abs(prec_middle(c) - 0.5 * ip(a, b)), 0.5 * nm(a) * nm(b)]


def ch_prec_gen2(c):
    a, b = c["a"], c["b"]
    return [np.abs(prec_middle(c)), 0.5 * (np.abs(ip(a, b)) + nm(a) * nm(b))]


def ch_sum_bound(c):
    a, b = c["a"], c["b"]
    T = weighted_sum_op(c, shift_half=True)
    return [np.abs(T.form(a, b)), 0.5 * np.sum(np.abs(c["zk"]), -1) * nm(a) * nm(b)]


def ch_prod_bound(c):
    a, b = c["a"], c["b"]
    k = c["zk"].shape[-1]
    bound = np.prod(np.abs(c["zk"]), -1) / 2.0**k * nm(a) * nm(b)
    return [np.abs(product_op(c).form(a, b)), bound]


def ch_prod_richard(c):
    a, b = c["a"], c["b"]
    # T = prod z_k (S_k - I/2) + I/2 is the polynomial part of the product
    T = operators.combine([(1.0, product_op(c))], shift=0.5)
    return [np.abs(T.form(a, b) - 0.5 * ip(a, b)), 0.5 * nm(a) * nm(b)]


def ch_cor_convex(c):
    a, b = c["a"], c["b"]
    T = weighted_sum_op(c, shift_half=False)
    return [np.abs(T.form(a, b) - 0.5 * ip(a, b)), 0.5 * nm(a) * nm(b)]


def ch_prop_buzano_gen(c):
    a, b = c["a"], c["b"]
    T = weighted_sum_op(c, shift_half=False)
    return [np.abs(T.form(a, b)), 0.5 * (np.abs(ip(a, b)) + nm(a) * nm(b))]


def ch_opnorm_16_3(c):
    al, be = c["alpha"], c["beta"]
    T = operators.combine([(al, operators.selberg([c["x"]]))], shift=-be)
    return [operators.spectral_norm(T), _mx(al, be)]


def ch_debug(c):
    x = c["x"]
    return [nm(x), 0.5 * nm(x)]


# -- side conditions on parameters ------------------------------------------


def _sandwich_ok(c, pol):
    al, be = c["alpha"], c["beta"]
    return (np.abs(be) > 0) & (np.abs(al - be) >= np.abs(be) - pol.tolerance(np.abs(be)))


def _th21_ok(c, pol):
    al, be = c["alpha"], c["beta"]
    return (np.abs(be) > 0) & (al != be) & (np.abs(al - be) <= np.abs(be) + pol.tolerance(np.abs(be)))


def _th22_ok(c, pol):
    return _mx(c["alpha"], c["beta"]) > 0


def _simplex_ok(c, pol):
    z = c["zk"]
    s = np.sum(z, -1)
    sa = np.sum(np.abs(z), -1)
    return (np.abs(s - 1) <= pol.tolerance(1.0)) & (np.abs(sa - 1) <= pol.tolerance(1.0))


def _product_ok(c, pol):
    z = c["zk"]
    k = z.shape[-1]
    target = -((-1.0) ** k) * 2.0 ** (k - 1)
    return np.abs(np.prod(z, -1) - target) <= pol.tolerance(abs(target))


def relative_to_beta(raw, case):
    """``alpha = beta + |beta| w`` for a raw offset ``w``."""
    be = case["beta"]
    return be + np.abs(be) * raw


def _offset_outside(rng, n, count=None):
    """Offsets ``w`` with ``|w|`` in ``[1, 1 + RADIUS]``."""
    r = 1.0 + RADIUS * rng.random(n)
    return r * np.exp(2j * np.pi * rng.random(n))


def _offset_inside(rng, n, count=None):
    """Offsets ``w`` in the closed unit disk, excluding 0."""
    r = np.sqrt(rng.random(n))
    r = np.where(r > 0, r, 0.5)
    return r * np.exp(2j * np.pi * rng.random(n))


V = Vector
R = (REAL,)
NZ = (NONZERO,)

ENTRIES = (
    Entry(
        "CS_DISCRETE",
        "discrete Cauchy-Buniakowski-Schwarz inequality for real n-tuples",
        (V("a", R), V("b", R)),
        ch_cs_discrete,
        ("(sum a_k b_k)^2 <= sum a_k^2 sum b_k^2",),
        real=True,
    ),
    Entry(
        "OSTROWSKI_DISCRETE",
        "Ostrowski's discrete refinement under sum y_k z_k = 0, sum x_k z_k = 1",
        (V("z", (REAL, NONZERO)), V("y", (REAL, NONZERO, Orth("z"))), V("x", (REAL, InnerOne("z"), NotProp("y")))),
        ch_ostrowski_discrete,
        ("sum y^2 / sum z^2 <= sum x^2 sum y^2 - (sum x y)^2",),
        min_dim=2,
        real=True,
    ),
    Entry("CS", "Cauchy-Schwarz inequality", (V("x"), V("y")), ch_cs, ("|<x,y>| <= |x| |y|",)),
    Entry(
        "BUZANO",
        "Buzano's extension of Cauchy-Schwarz",
        (V("a"), V("b"), V("x")),
        ch_buzano,
        ("|<a,x><x,b>| <= |x|^2 (|<a,b>| + |a||b|) / 2",),
    ),
    Entry(
        "RICHARD",
        "Richard's inequality (real spaces; complex form via KDM_17 at alpha = 2)",
        (V("a", R), V("b", R), V("x", R)),
        ch_richard,
        ("|<a,x><x,b> - |x|^2 <a,b>/2| <= |x|^2 |a||b| / 2",),
        real=True,
    ),
    Entry(
        "PRECUPANU",
        "Precupanu's two-sided bound in real spaces",
        (V("a", R), V("b", R), V("w", (REAL, NONZERO)), V("z", (REAL, NONZERO))),
        ch_precupanu,
        ("(<a,b> - |a||b|)/2 <= middle", "middle <= (<a,b> + |a||b|)/2"),
        real=True,
    ),
    Entry(
        "POPA_RASA",
        "Popa-Rasa bound on the real part of the Richard expression",
        (V("a"), V("b"), V("x")),
        ch_popa_rasa,
        ("|Re(...)| <= |x|^2 sqrt(|a|^2|b|^2 - (Im<a,b>)^2) / 2",),
    ),
    Entry(
        "LUPU",
        "Lupu-Schwarz three-vector inequality",
        (V("a"), V("b"), V("x")),
        ch_lupu,
        ("weighted squares <= |a|^2|b|^2|x|^2 + 2|<a,b><b,x><x,a>|",),
    ),
    Entry(
        "LUPU_REFINEMENT",
        "Cauchy-Schwarz refinement derived from the Lupu-Schwarz inequality",
        (V("a"), V("b"), V("x", NZ)),
        ch_lupu_refinement,
        ("0 <= (|a||<b,x>| - |b||<x,a>|)^2/|x|^2", "... <= |a|^2|b|^2 - |<a,b>|^2"),
    ),
    Entry(
        "LOWER_11",
        "lower bound for |alpha<a,x>x - beta|x|^2 a|",
        (V("a"), V("x")),
        ch_lower_11,
        ("|x||<a,x>||beta - alpha| <= |alpha<a,x>x - beta|x|^2 a|",),
        params=(A1, B1),
    ),
    Entry(
        "UPPER_14",
        "upper bound for |alpha<a,x>x - beta|x|^2 a|",
        (V("a"), V("x")),
        ch_upper_14,
        ("|alpha<a,x>x - beta|x|^2 a| <= max(|alpha-beta|,|beta|) |a||x|^2",),
        params=(A1, B1),
    ),
    Entry(
        "SANDWICH_15",
        "Cauchy-Schwarz sandwich for |alpha - beta| >= |beta| > 0",
        (V("a"), V("x", NZ)),
        ch_sandwich_15,
        ("|<a,x>| <= middle", "middle <= |a||x|"),
        params=(BNZ, Param("alpha", _offset_outside, project=relative_to_beta)),
        requires=(("|alpha - beta| >= |beta| > 0", _sandwich_ok),),
    ),
    Entry(
        "KDM_16",
        "two-parameter extension of Buzano's inequality",
        (V("a"), V("b"), V("x")),
        ch_kdm_16,
        ("|alpha<a,x><x,b> - beta|x|^2<a,b>| <= max(|beta|,|alpha-beta|)|x|^2|a||b|",),
        params=(A1, B1),
    ),
    Entry(
        "KDM_17",
        "Khosravi-Drnovsek-Moslehian extension of Buzano's inequality (beta = 1)",
        (V("a"), V("b"), V("x")),
        ch_kdm_17,
        ("|alpha<a,x><x,b> - |x|^2<a,b>| <= max(1,|alpha-1|)|x|^2|a||b|",),
        params=(Param("alpha", kdm_alpha),),
    ),
    Entry(
        "TH_18",
        "squared refinement of the two-parameter bound",
        (V("a"), V("b", NZ), V("x", NZ)),
        ch_th_18,
        ("0 <= middle", "middle <= |alpha-beta|^2|<a,x>|^2 + |beta|^2(|a|^2|x|^2 - |<a,x>|^2)"),
        params=(A1, B1),
    ),
    Entry(
        "COR_19",
        "the alpha = beta case of TH_18",
        (V("a"), V("b", NZ), V("x", NZ)),
        ch_cor_19,
        ("0 <= middle", "middle <= |a|^2|x|^2 - |<a,x>|^2"),
    ),
    Entry(
        "DRAGOMIR_GOSA",
        "Dragomir-Gosa inequality for <x,b> = 0",
        (V("b", NZ), V("x", (NONZERO, Orth("b"))), V("a")),
        ch_dragomir_gosa,
        ("|x|^2 |<a,b>|^2 / |b|^2 <= |a|^2|x|^2 - |<a,x>|^2",),
        min_dim=2,
    ),
    Entry(
        "OSTROWSKI_IP",
        "Ostrowski's inequality in complex inner product spaces",
        (V("b", NZ), V("x", (NONZERO, Orth("b"))), V("a", (InnerUnimodular("b"),))),
        ch_ostrowski_ip,
        ("|x|^2 / |b|^2 <= |a|^2|x|^2 - |<a,x>|^2",),
        min_dim=2,
    ),
    Entry(
        "TH_21",
        "lower bound for the Buzano-type gap when |alpha - beta| <= |beta|",
        (V("a", NZ), V("b"), V("x")),
        ch_th_21,
        ("0 <= bound", "bound <= |beta||x|^2|a||b| - |alpha<a,x><x,b> - beta|x|^2<a,b>|"),
        params=(BNZ, Param("alpha", _offset_inside, project=relative_to_beta)),
        requires=(("alpha != beta, |alpha - beta| <= |beta|, beta != 0", _th21_ok),),
    ),
    Entry(
        "TH_22",
        "gap bound with A(alpha, beta)",
        (V("a", NZ), V("b", NZ), V("x", NZ)),
        ch_th_22,
        ("0 <= A/(2M|x|^2|a||b|)", "A/(2M|x|^2|a||b|) <= gap"),
        params=(A1, B1),
        requires=(("max(|alpha - beta|, |beta|) != 0", _th22_ok),),
    ),
    Entry(
        "REM_23",
        "alpha = 1, beta = 1/2 case: an improvement of Richard's inequality",
        (V("a", NZ), V("b", NZ), V("x", NZ)),
        ch_rem_23,
        ("0 <= A/(|x|^2|a||b|)", "A/(|x|^2|a||b|) <= |x|^2|a||b|/2 - |Richard expression|"),
    ),
    Entry(
        "COR_24",
        "two-sided bound on |alpha||<a,x><x,b>| from the modulus triangle inequality",
        (V("a", NZ), V("b", NZ), V("x", NZ)),
        ch_cor_24,
        ("lower <= |alpha||<a,x><x,b>|", "|alpha||<a,x><x,b>| <= upper"),
        params=(A1, BNZ),
        requires=(("beta != 0", _beta_nonzero),),
    ),
    Entry(
        "PROP_25",
        "refinement of Buzano's inequality with max{A(1,1/2), A(2,1)/4}",
        (V("a", NZ), V("b", NZ), V("x", NZ)),
        ch_prop_25,
        ("|<a,x><x,b>| <= Buzano bound - max{...}/(|x|^2|a||b|)",),
    ),
    Entry(
        "OPNORM_26",
        "bilinear form of alpha(x (x) x) - beta|x|^2 I",
        (V("a"), V("b"), V("x")),
        ch_opnorm_26,
        ("|<(alpha x(x)x - beta|x|^2 I)a, b>| <= max(|beta|,|alpha-beta|)|x|^2|a||b|",),
        params=(A1, B1),
    ),
    Entry(
        "FUJII_KUBO",
        "Fujii-Kubo reflection bound |2P_x - I| <= 1",
        (V("x", (UNIT,)),),
        ch_fujii_kubo,
        ("|2P_x - I| <= 1",),
    ),
    Entry(
        "SELBERG",
        "Selberg's inequality",
        (V("x"), VectorSet("Z")),
        ch_selberg,
        ("sum |<x,z_i>|^2 / d_i <= |x|^2",),
    ),
    Entry(
        "SELBERG_CS_REF",
        "Cauchy-Schwarz refinement from one-vector Selberg operators",
        (V("a", NZ), V("b", NZ)),
        ch_selberg_cs_ref,
        ("0 <= product", "product <= |b|^2(|a|^2 - <S_b a,a>)", "... = |a|^2|b|^2 - |<a,b>|^2"),
    ),
    Entry(
        "RICHARD_SELBERG",
        "Richard's inequality through the Selberg operator of {x}, |x| = 1",
        (V("a"), V("b"), V("x", (UNIT,))),
        ch_richard_selberg,
        ("|<S a,b> - <a,b>/2| <= |a||b|/2",),
    ),
    Entry(
        "LEMMA_PREV_CHAIN",
        "three-step Selberg refinement of Cauchy-Schwarz",
        (V("a"), V("b"), VectorSet("Z")),
        ch_lemma_prev,
        ("|<a,b>| <= e2", "e2 <= e1", "e1 <= |a||b|"),
    ),
    Entry(
        "TH_GEN",
        "Richard's inequality for an arbitrary Selberg operator",
        (V("a"), V("b"), VectorSet("Z")),
        ch_th_gen,
        ("|<S_Z a,b> - <a,b>/2| <= |a||b|/2",),
    ),
    Entry(
        "PROP_EORTH",
        "refinement using a unit vector orthogonal to Z",
        (VectorSet("Z", below_dim=True), V("e", (UNIT, Orth("Z"))), V("a"), V("b")),
        ch_prop_eorth,
        ("lhs <= middle", "middle <= |a||b|/2"),
        min_dim=2,
    ),
    Entry(
        "REF_CS_DRAGOMIR",
        "Dragomir's refinement of Cauchy-Schwarz with a unit vector e",
        (V("e", (UNIT,)), V("a"), V("b")),
        ch_ref_cs_dragomir,
        ("|<a,b>| <= middle", "middle <= |a||b|"),
    ),
    Entry(
        "COR_RICHARD_REF",
        "refinement of Richard's inequality with e orthogonal to unit x",
        (V("x", (UNIT,)), V("e", (UNIT, Orth("x"))), V("a"), V("b")),
        ch_cor_richard_ref,
        ("lhs <= middle", "middle <= |a||b|/2"),
        min_dim=2,
    ),
    Entry(
        "COR_BUZANO_SELBERG",
        "Buzano-type refinement for Selberg operators",
        (VectorSet("Z", below_dim=True), V("e", (UNIT, Orth("Z"))), V("a"), V("b")),
        ch_cor_buzano_selberg,
        ("|<S a,b>| <= middle", "middle <= (|<a,b>| + |a||b|)/2"),
        min_dim=2,
    ),
    Entry(
        "PREC_GEN",
        "complex version of Precupanu's inequality",
        (V("a"), V("b"), V("w", NZ), V("z", NZ)),
        ch_prec_gen,
        ("|middle - <a,b>/2| <= |a||b|/2",),
    ),
    Entry(
        "PREC_GEN2",
        "Buzano-type consequence of the complex Precupanu inequality",
        (V("a"), V("b"), V("w", NZ), V("z", NZ)),
        ch_prec_gen2,
        ("|middle| <= (|<a,b>| + |a||b|)/2",),
    ),
    Entry(
        "SUM_BOUND",
        "triangle-inequality bound for sum z_k (S_k - I/2)",
        (V("a"), V("b"), Family("Zs")),
        ch_sum_bound,
        ("|<sum z_k(S_k - I/2)a,b>| <= (sum |z_k|/2)|a||b|",),
        params=(Param("zk", disk, family="Zs"),),
    ),
    Entry(
        "PROD_BOUND",
        "submultiplicative bound for prod z_k (S_k - I/2)",
        (V("a"), V("b"), Family("Zs")),
        ch_prod_bound,
        ("|<prod z_k(S_k - I/2)a,b>| <= (prod |z_k|/2^n)|a||b|",),
        params=(Param("zk", disk, family="Zs"),),
    ),
    Entry(
        "PROD_RICHARD",
        "Richard-type form of the product bound, (-1)^n prod z_k = -2^(n-1)",
        (V("a"), V("b"), Family("Zs")),
        ch_prod_richard,
        ("|<T a,b> - <a,b>/2| <= |a||b|/2, T = prod z_k(S_k - I/2) + I/2",),
        params=(Param("zk", disk, project=product_weights, family="Zs"),),
        requires=(("(-1)^n prod z_k = -2^(n-1)", _product_ok),),
    ),
    Entry(
        "COR_CONVEX",
        "Richard-type bound for convex combinations of Selberg operators",
        (V("a"), V("b"), Family("Zs")),
        ch_cor_convex,
        ("|<sum z_k S_k a,b> - <a,b>/2| <= |a||b|/2",),
        params=(Param("zk", simplex, project=to_simplex, family="Zs"),),
        requires=(("sum |z_k| = sum z_k = 1", _simplex_ok),),
    ),
    Entry(
        "PROP_BUZANO_GEN",
        "Buzano-type bound for convex combinations of Selberg operators",
        (V("a"), V("b"), Family("Zs")),
        ch_prop_buzano_gen,
        ("|<sum z_k S_k a,b>| <= (|<a,b>| + |a||b|)/2",),
        params=(Param("zk", simplex, project=to_simplex, family="Zs"),),
        requires=(("sum |z_k| = sum z_k = 1", _simplex_ok),),
    ),
    Entry(
        "OPNORM_16_3",
        "operator norm of alpha S_{x} - beta I",
        (V("x", NZ),),
        ch_opnorm_16_3,
        ("|alpha S_{x} - beta I| <= max(|beta|,|alpha-beta|)",),
        params=(A1, B1),
    ),
)

DEBUG_ENTRIES = (
    Entry(
        "DEBUG_FALSE",
        "deliberately false chain used to exercise failure reporting",
        (V("x", NZ),),
        ch_debug,
        ("|x| <= |x|/2",),
        debug=True,
    ),
)
