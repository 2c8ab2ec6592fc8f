import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from basisschemes import (DegLex, DegRevLex, Lex, ParseError, Polynomial,
                          VariableUniverse, divide, parse_polynomial)

U2 = VariableUniverse.for_x(["x", "y"])
UC = VariableUniverse.build(["x", "y"], [(i, j) for i in (1, 2, 3) for j in (1, 2)])


def P(text, u=U2):
    return parse_polynomial(text, u)


def test_product_of_sum_and_difference():
    assert P("x + y") * P("x - y") == P("x^2 - y^2")


def test_specialize_prebasis_tail():
    g2s = parse_polynomial("y^2 - c[1,2] - c[2,2]*x - c[3,2]*y", UC)
    out = g2s.substitute({"c[1,2]": 1, "c[2,2]": 0, "c[3,2]": 0})
    assert out == parse_polynomial("y^2 - 1", UC)


def test_substitute_annihilates():
    assert P("y - x^2").substitute({"y": P("x^2")}).is_zero


def test_substitute_is_ring_homomorphism():
    f = parse_polynomial("x*c[1,1] + y^2", UC)
    g = parse_polynomial("c[2,1] - x", UC)
    rules = {"c[1,1]": parse_polynomial("x + y", UC), "x": parse_polynomial("2", UC)}
    assert (f * g).substitute(rules) == f.substitute(rules) * g.substitute(rules)
    assert (f + g).substitute(rules) == f.substitute(rules) + g.substitute(rules)


def test_division_single_step_rewrite():
    u = VariableUniverse.build(["x", "y"], [(1, 1), (2, 1), (3, 1)])
    f = parse_polynomial("x^2*y", u)
    d = parse_polynomial("x^2 - c[1,1] - c[2,1]*x - c[3,1]*y", u)
    _, r = divide(f, [d], DegLex(u))
    assert r == parse_polynomial("c[1,1]*y + c[2,1]*x*y + c[3,1]*y^2", u)


def test_division_by_self():
    f = P("x^2 + y - 3")
    q, r = divide(f, [f], DegLex(U2))
    assert r.is_zero
    assert q[0] == Polynomial.constant(U2, 1)


def test_division_no_divisible_terms():
    u = VariableUniverse.build(["x", "y"], [(1, 1)])
    q, r = divide(parse_polynomial("y", u),
                  [parse_polynomial("x - c[1,1]", u)], Lex(u))
    assert r == parse_polynomial("y", u)
    assert all(qi.is_zero for qi in q)


def test_division_empty_divisors():
    q, r = divide(P("x + 1"), [], DegLex(U2))
    assert q == [] and r == P("x + 1")


def test_homogeneity_with_weights():
    u = VariableUniverse.build(["x"], [(1, 1)])
    f = parse_polynomial("x^2 - c[1,1]", u)
    assert f.homogeneous_degree({"x": 1, "c[1,1]": 2}) == 2
    assert f.homogeneous_degree({"x": 1, "c[1,1]": 3}) is None
    assert Polynomial.zero(u).homogeneous_degree({"x": 1, "c[1,1]": 1}) == 0


def test_prebasis_is_weighted_homogeneous():
    g2s = parse_polynomial("y^2 - c[1,2] - c[2,2]*x - c[3,2]*y", UC)
    weights = {"x": 3, "y": 2, "c[1,2]": 4, "c[2,2]": 1, "c[3,2]": 2,
               "c[1,1]": 6, "c[2,1]": 3, "c[3,1]": 4}
    assert g2s.homogeneous_degree(weights) == 4


def test_parse_print_round_trip():
    samples = ["y^2 - c[1,2] - c[2,2]*x - c[3,2]*y",
               "1/2*x^2*y - 7", "0", "-x + 3/4", "x*y - x - y + 1"]
    for text in samples:
        f = parse_polynomial(text, UC)
        assert parse_polynomial(f.format(), UC) == f


def test_parse_rejects_garbage():
    for bad in ["x +", "^2", "c[1]", "x^-1", "(x", "3//4"]:
        with pytest.raises(ParseError):
            parse_polynomial(bad, UC)


def test_json_round_trip():
    f = parse_polynomial("1/3*x^2 - c[1,1]*y + 2", UC)
    doc = json.loads(json.dumps(f.to_json()))
    assert Polynomial.from_json(doc, UC) == f
    entry = f.to_json()[0]
    assert set(entry) == {"exponents", "coeff"}


small_poly = st.lists(
    st.tuples(st.tuples(st.integers(0, 3), st.integers(0, 3)),
              st.integers(-5, 5)),
    max_size=5).map(lambda items: Polynomial(
        U2, {e: Fraction(c) for e, c in items if c}))


@settings(max_examples=60, deadline=None)
@given(f=small_poly, g=small_poly, h=small_poly)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) * h == f * h + g * h
    assert f + Polynomial.zero(U2) == f


@settings(max_examples=60, deadline=None)
@given(f=small_poly, g=small_poly, h=small_poly)
def test_division_postconditions(f, g, h):
    divisors = [d for d in (g, h) if not d.is_zero]
    ordering = DegRevLex(U2)
    q, r = divide(f, divisors, ordering)
    assert sum((qi * di for qi, di in zip(q, divisors)),
               Polynomial.zero(U2)) + r == f
    leads = [d.leading(ordering)[0] for d in divisors]
    for t, _ in r.terms():
        assert not any(lt.divides(t) for lt in leads)
    if not f.is_zero:
        fkey = ordering.key(f.leading(ordering)[0])
        for qi, di in zip(q, divisors):
            if not qi.is_zero:
                prod = qi * di
                assert ordering.key(prod.leading(ordering)[0]) <= fkey
