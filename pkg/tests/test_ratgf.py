import pytest
from hypothesis import given, settings, strategies as st

from ppgf.multipoly import Polynomial, VariableContext, parse
from ppgf.ratgf import (
    DenominatorError,
    FactoredDenominator,
    FactoredGF,
    gf_add,
    gf_clear_to,
    gf_mul,
    gf_reduce,
    gf_series,
    gf_substitute,
)
from ppgf.recursion import compute_Q, compute_Qtilde, denominator_Dk

C1 = VariableContext.standard(1)
C2 = VariableContext.standard(2)


def G(num, den, ctx=C2):
    return FactoredGF(parse(num, ctx), FactoredDenominator.from_monomials(ctx, den))


X1 = (1, 0, 0, 0)
Y1 = (0, 0, 1, 0)
X1Y1 = (1, 0, 1, 0)


def test_add_examples():
    s = gf_add(G("1", [X1]), G("-x1", [X1]))
    assert s.den.monomials() == [X1]
    assert gf_reduce(s) == FactoredGF.constant(C2, 1)
    a = G("x1*y2 - 3", [X1, X1Y1])
    assert gf_add(a, FactoredGF.constant(C2, 0)) == a
    s = gf_add(G("1", [X1]), G("1", [Y1]))
    assert s == G("2 - x1 - y1", [X1, Y1])


def test_add_uses_max_multiplicity():
    s = gf_add(G("1", [X1, X1]), G("1", [X1, Y1]))
    assert s.den.counter() == {X1: 2, Y1: 1}
    assert s.num == parse("1 - y1", C2) + parse("1 - x1", C2)


def test_mul_examples():
    p = gf_mul(G("1", [X1]), G("1 - x1", []))
    assert p == G("1 - x1", [X1])
    a = G("x1 - 2*y2", [X1Y1])
    assert gf_mul(a, FactoredGF.constant(C2, 1)) == a
    assert gf_mul(G("x1", [X1]), G("y1", [X1Y1])) == G("x1*y1", [X1, X1Y1])


def test_substitute_examples():
    q1 = compute_Q(1)
    images = {"x1": C2.monomial(x1=1, x2=1, y1=1), "y1": C2.monomial(y2=1)}
    img = gf_substitute(q1, images, C2)
    assert sorted(img.den.monomials()) == sorted([(1, 1, 1, 0), (1, 1, 1, 1)])
    g = G("x1 + y2", [X1])
    assert gf_substitute(g, {}) == g
    const = FactoredGF.constant(C2, 5)
    assert gf_substitute(const, {"x1": (0, 0, 0, 2)}) == const


def test_reduce_examples():
    assert gf_reduce(G("1 - x1", [X1])) == FactoredGF.constant(C2, 1)
    g = G("1 - x1^2*y1*x2", [X1, X1Y1])
    assert gf_reduce(g) == g
    assert gf_reduce(gf_reduce(g)) == g


def test_reduce_on_raw_qtilde2():
    raw = FactoredGF.constant(C2, 0)
    for j in range(3):
        from ppgf.recursion import embed
        raw = gf_add(raw, embed(compute_Q(j), 2))
    red = gf_reduce(raw)
    assert set(red.den.monomials()) == {(1, 0, 0, 0), (1, 0, 1, 0), (1, 1, 0, 0), (1, 1, 1, 0), (1, 1, 1, 1)}
    assert len(red.den) == 5
    assert red.num == parse("1 - x1^2*y1*x2", C2)


def test_series_examples():
    C = VariableContext(("x1",))
    g = FactoredGF(parse("1", C), FactoredDenominator.from_monomials(C, [(1,)]))
    assert gf_series(g, 3) == parse("1 + x1 + x1^2 + x1^3", C)
    assert gf_series(compute_Q(1), 2) == parse("x1 + x1^2 + x1*y1", C1)
    assert gf_series(compute_Qtilde(2), 2) == parse("1 + x1 + x1*y1 + x1^2 + x1*x2", C2)


def test_series_rejects_degree_zero_grading():
    g = G("1", [Y1])
    with pytest.raises(DenominatorError):
        gf_series(g, 3, degree=lambda e: e[0] + e[1])


def test_constant_factor_rejected():
    with pytest.raises(DenominatorError):
        FactoredDenominator.from_monomials(C2, [(0, 0, 0, 0)])


def test_clear_to_examples():
    assert gf_clear_to(compute_Qtilde(2), denominator_Dk(2)) == parse("1 - x1^2*y1*x2", C2)
    p = FactoredGF.polynomial(parse("x1 - 4", C2))
    assert gf_clear_to(p, FactoredDenominator.empty(C2)) == p.num
    assert gf_clear_to(compute_Q(1), denominator_Dk(1)) == parse("x1 + x1*y1 - x1^2*y1", C1)


def test_clear_to_rejects_foreign_factor():
    with pytest.raises(DenominatorError):
        gf_clear_to(G("1", [(0, 1, 0, 0)]), denominator_Dk(2))


def test_json_round_trip():
    g = compute_Qtilde(2)
    assert FactoredGF.from_json(g.to_json()) == g


# -- properties --------------------------------------------------------------

CTX = VariableContext(("a", "b", "c"))
monos = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))


@st.composite
def gfs(draw):
    terms = draw(st.lists(st.tuples(monos, st.integers(-5, 5)), max_size=5))
    den = draw(st.lists(monos.filter(any), max_size=3))
    return FactoredGF(Polynomial(CTX, terms), FactoredDenominator.from_monomials(CTX, den))


@settings(max_examples=60, deadline=None)
@given(gfs(), gfs(), st.integers(0, 8))
def test_series_is_additive(a, b, n):
    assert gf_series(gf_add(a, b), n) == gf_series(a, n) + gf_series(b, n)


@settings(max_examples=60, deadline=None)
@given(gfs(), gfs(), st.integers(0, 6))
def test_series_is_multiplicative(a, b, n):
    assert gf_series(gf_mul(a, b), n) == (gf_series(a, n) * gf_series(b, n)).truncate(n)


@settings(max_examples=60, deadline=None)
@given(gfs(), st.integers(0, 8))
def test_reduce_preserves_series_and_is_idempotent(g, n):
    r = gf_reduce(g)
    assert gf_series(r, n) == gf_series(g, n)
    assert gf_reduce(r) == r


@settings(max_examples=40, deadline=None)
@given(gfs(), gfs())
def test_reduce_cancels_planted_factor(g, h):
    # multiplying by (1 - m)/(1 - m) must reduce back to something no larger
    m = (1, 1, 0)
    planted = FactoredGF(g.num.mul_one_minus(m), g.den.merge(FactoredDenominator.from_monomials(CTX, [m])))
    assert len(gf_reduce(planted).den) <= len(g.den)
