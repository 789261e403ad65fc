import json

import pytest
from hypothesis import given, settings, strategies as st

from ppgf.multipoly import (
    ContextMismatchError,
    NotDivisibleError,
    Polynomial,
    VariableContext,
    parse,
    poly_add,
    poly_exact_div,
    poly_mul,
    poly_substitute,
    poly_truncate,
)
from ppgf.ratgf import FactoredDenominator
from ppgf.recursion import denominator_Dk

C2 = VariableContext.standard(2)
C1 = VariableContext.standard(1)


def P(text, ctx=C2):
    return parse(text, ctx)


def test_context_rejects_duplicates():
    with pytest.raises(ValueError):
        VariableContext(("x1", "x1"))


def test_standard_context_order():
    assert VariableContext.standard(3).names == ("x1", "x2", "x3", "y1", "y2", "y3")


def test_add_examples():
    assert poly_add(P("x1 + 1"), P("-1")) == P("x1")
    p = P("3*x1^2*y2 - x2 + 7")
    assert poly_add(p, Polynomial.zero(C2)) == p
    assert poly_add(P("1 - x1*y1*x2"), P("x1*y1*x2")) == P("1")


def test_no_zero_terms_stored():
    p = P("x1 - x1 + y1")
    assert len(p) == 1
    assert p.as_dict() == {(0, 0, 1, 0): 1}


def test_mul_examples():
    assert poly_mul(P("1 - x1"), P("1 + x1")) == P("1 - x1^2")
    r0, r3 = (1, 0, 0, 0), (1, 1, 1, 0)
    prod = poly_mul(Polynomial.monomial(C2, r0), Polynomial.monomial(C2, r3))
    assert prod == P("x1^2*x2*y1")
    p = P("2*x1*y1 - y2^3")
    assert p * 1 == p


def test_context_mismatch():
    with pytest.raises(ContextMismatchError):
        poly_add(P("x1"), parse("x1", C1))
    with pytest.raises(ContextMismatchError):
        poly_mul(P("x1"), parse("x1", C1))


def test_exact_div_examples():
    C = VariableContext(("x1", "y1"))
    assert poly_exact_div(parse("1 - x1^2", C), parse("1 - x1", C)) == parse("1 + x1", C)
    with pytest.raises(NotDivisibleError):
        poly_exact_div(parse("1 - x1^2", C), parse("1 - y1", C))
    with pytest.raises(ZeroDivisionError):
        poly_exact_div(parse("x1", C), Polynomial.zero(C))


def test_exact_div_of_expanded_D2():
    d2 = denominator_Dk(2).expand()
    quotient = poly_exact_div(d2, P("1 - x1"))
    # oracle: multiply the four remaining factors one by one
    expected = P("1")
    for f in ("1 - x1*y1", "1 - x1*x2", "1 - x1*x2*y1", "1 - x1*x2*y1*y2"):
        expected = expected * P(f)
    assert quotient == expected


def test_exact_div_general_divisor():
    a = P("x1 + y1 - 3*x2")
    b = P("2*x1*y2 + y1^2 + 5")
    assert (a * b).exact_div(b) == a
    with pytest.raises(NotDivisibleError):
        (a * b + 1).exact_div(b)


def test_exact_div_by_one_minus_laurent():
    C = VariableContext(("x", "v"))
    a = parse("v^-1 + x", C)
    b = parse("1 - x*v", C)
    assert (a * b).exact_div(b) == a


def test_substitute_examples():
    ctx = VariableContext(("x1", "y1"))
    img = poly_substitute(parse("1 - x1", ctx), {"x1": C2.monomial(x1=1, x2=1, y1=1), "y1": C2.monomial(y1=1)}, C2)
    assert img == P("1 - x1*x2*y1")
    n1 = parse("x1 + x1*y1 - x1^2*y1", ctx)
    z12 = {"x1": C2.monomial(x1=1, x2=1, y1=1), "y1": C2.monomial(y2=1)}
    assert poly_substitute(n1, z12, C2) == P("x1*x2*y1 + x1*x2*y1*y2 - x1^2*x2^2*y1^2*y2")
    p = P("x1*y2 - 4*x2^3 + 1")
    assert poly_substitute(p, {}) == p


def test_substitute_missing_target_variable():
    with pytest.raises(KeyError):
        P("y2").substitute({}, VariableContext(("x1", "x2", "y1")))


def test_truncate_examples():
    C = VariableContext(("x1",))
    assert poly_truncate(parse("1 + x1 + x1^2", C), 1) == parse("1 + x1", C)
    p = P("x1^3*y2 - x1 + 2")
    assert poly_truncate(p, p.total_degree()) == p
    C3 = VariableContext.standard(3)
    from tests.reference_data import QTILDE3_NUMERATOR
    n3 = parse(QTILDE3_NUMERATOR, C3)
    # x1^2*y1*x2 has degree 4, so it is the only other survivor at cut 4
    assert poly_truncate(n3, 3) == parse("1", C3)
    assert poly_truncate(n3, 4) == parse("1 - x1^2*y1*x2", C3)


def test_text_format():
    assert str(P("1 - x1^2*y1*x2")) == "-x1^2*x2*y1 + 1"
    assert str(P("0")) == "0"
    assert str(P("-2*x1 + 3")) == "-2*x1 + 3"


def test_canonical_order_is_graded_lex():
    p = P("y1 + x1^2 + 1 + x2 + x1")
    assert [e for e, _ in p.terms()] == [(0, 0, 0, 0), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0), (2, 0, 0, 0)]


def test_json_encoding():
    p = P("-x1^2*y1*x2 + 1")
    data = p.to_json()
    assert data == {"vars": ["x1", "x2", "y1", "y2"],
                    "terms": [{"c": "1", "e": [0, 0, 0, 0]}, {"c": "-1", "e": [2, 1, 1, 0]}]}
    assert Polynomial.from_json(json.dumps(data)) == p


def test_big_coefficients_are_exact():
    p = P("x1 + 1") ** 64
    assert p.coefficient((32, 0, 0, 0)) == 1832624140942590534
    assert p.exact_div(P("x1 + 1") ** 63) == P("x1 + 1")


# -- properties --------------------------------------------------------------

NAMES = ("a", "b", "c", "d", "e", "f")


@st.composite
def polys(draw, ctx=VariableContext(NAMES), max_terms=20, max_exp=3):
    n = draw(st.integers(0, max_terms))
    terms = draw(st.lists(
        st.tuples(st.tuples(*[st.integers(0, max_exp)] * ctx.arity), st.integers(-9, 9)),
        min_size=n, max_size=n))
    return Polynomial(ctx, terms)


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Polynomial.zero(a.ctx)


@settings(max_examples=60, deadline=None)
@given(polys(), polys(max_terms=6))
def test_division_undoes_multiplication(a, b):
    if b.is_zero():
        return
    assert poly_exact_div(a * b, b) == a


@settings(max_examples=60, deadline=None)
@given(polys(max_terms=10), st.tuples(*[st.integers(0, 2)] * 6).filter(any))
def test_division_by_one_minus_monomial(a, m):
    b = Polynomial.one_minus(a.ctx, m)
    assert poly_exact_div(a * b, b) == a


@settings(max_examples=40, deadline=None)
@given(polys(max_terms=8), polys(max_terms=8),
       st.lists(st.tuples(*[st.integers(0, 2)] * 4), min_size=6, max_size=6))
def test_substitution_is_multiplicative(a, b, images):
    target = VariableContext(("p", "q", "r", "s"))
    mapping = dict(zip(NAMES, images))
    assert (a * b).substitute(mapping, target) == a.substitute(mapping, target) * b.substitute(mapping, target)


@settings(max_examples=60, deadline=None)
@given(polys())
def test_encodings_round_trip(a):
    assert Polynomial.from_json(json.loads(json.dumps(a.to_json()))) == a
    assert parse(str(a), a.ctx) == a
    assert json.dumps(a.to_json()) == json.dumps(Polynomial(a.ctx, reversed(a.terms())).to_json())


def test_denominator_expand_matches_product():
    den = FactoredDenominator.from_monomials(C2, [(1, 0, 0, 0), (1, 0, 0, 0), (1, 1, 1, 0)])
    assert den.expand() == P("1 - x1") ** 2 * P("1 - x1*x2*y1")
