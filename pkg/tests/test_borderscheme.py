import random
from fractions import Fraction

from basisschemes import (SchemePoint, VariableUniverse, border_scheme_ideal,
                          generic_prebasis, is_border_basis_point,
                          multiplication_matrix, oracle_is_border_basis,
                          order_ideal_from_strings, parse_polynomial,
                          specialize_prebasis)
from basisschemes.borderscheme import (first_violated_commutator,
                                       prebasis_universe)
from corpus import make_oi, sample_points, staircase_point, x_universe

U2 = VariableUniverse.for_x(["x", "y"])


def test_generic_prebasis_standard_square():
    o = order_ideal_from_strings("1, x, y, x*y", U2)
    u = prebasis_universe(o)
    g = generic_prebasis(o, u)
    assert len(g) == 4
    assert g[1] == parse_polynomial(
        "y^2 - c[1,2] - c[2,2]*x - c[3,2]*y - c[4,2]*x*y", u)


def test_generic_prebasis_smallest_cases():
    o = order_ideal_from_strings("1", U2)
    u = prebasis_universe(o)
    g = generic_prebasis(o, u)
    assert [p.format() for p in g] == ["x - c[1,1]", "y - c[1,2]"]

    u1 = x_universe(1)
    o1 = order_ideal_from_strings("1, x", u1)
    ux = prebasis_universe(o1)
    g1 = generic_prebasis(o1, ux)
    assert g1[0] == parse_polynomial("x^2 - c[1,1] - c[2,1]*x", ux)


def test_multiplication_matrices_for_simplex():
    o = order_ideal_from_strings("1, x, y", U2)
    ax = multiplication_matrix(o, 1)
    ay = multiplication_matrix(o, 2)
    fmt = lambda m: [[e.format() for e in row] for row in m.entries]
    assert fmt(ax) == [["0", "c[1,1]", "c[1,2]"],
                       ["1", "c[2,1]", "c[2,2]"],
                       ["0", "c[3,1]", "c[3,2]"]]
    assert fmt(ay) == [["0", "c[1,2]", "c[1,3]"],
                       ["0", "c[2,2]", "c[2,3]"],
                       ["1", "c[3,2]", "c[3,3]"]]


def test_interior_columns_are_unit_vectors():
    o = order_ideal_from_strings("1, x, y, x^2, y^2", U2)
    ax = multiplication_matrix(o, 1)
    # x * x = x^2 is interior: the second column is a unit vector, no c's
    col = [ax[(r, 1)] for r in range(o.mu)]
    assert [e.format() for e in col] == ["0", "0", "0", "1", "0"]


def test_commutator_entry_matches_hand_computation():
    o = order_ideal_from_strings("1, x, y", U2)
    ideal = border_scheme_ideal(o)
    expected = parse_polynomial(
        "c[1,1]*c[2,2] + c[1,2]*c[3,2] - c[1,2]*c[2,1] - c[1,3]*c[3,1]",
        ideal.u)
    assert expected in ideal.generators


def test_trivial_commutator_cases():
    o = order_ideal_from_strings("1", U2)
    assert border_scheme_ideal(o).generators == ()
    u1 = x_universe(1)
    o1 = order_ideal_from_strings("1, x, x^2", u1)
    assert border_scheme_ideal(o1).generators == ()


def test_generators_vanish_at_origin_and_have_low_degree():
    for n, text in [(2, "1, x, y"), (2, "1, x, y, x*y"), (2, "1, y, y^2"),
                    (3, "1, z")]:
        o = make_oi(n, text)
        ideal = border_scheme_ideal(o)
        arrow = {}
        for name in ideal.u.names:
            i, j = ideal.u.positions[name]
            arrow[name] = (o.border[j - 1].total_degree()
                           - o.terms[i - 1].total_degree())
        for g in ideal.generators:
            assert g.constant_term() == 0
            assert g.total_degree() <= 2
            # homogeneous for the degree-difference grading
            degs = {t.weighted_degree(arrow) for t, _ in g.terms()}
            assert len(degs) == 1


def test_documented_simplex_entry_is_quadratic():
    # the (1,2) commutator entry of the simplex is purely quadratic
    o = order_ideal_from_strings("1, x, y", U2)
    ideal = border_scheme_ideal(o)
    entry = parse_polynomial(
        "c[1,1]*c[2,2] + c[1,2]*c[3,2] - c[1,2]*c[2,1] - c[1,3]*c[3,1]",
        ideal.u)
    assert {t.total_degree() for t, _ in entry.terms()} == {2}
    assert entry in ideal.generators


def test_zero_point_is_always_a_border_basis_point():
    for n, text in [(2, "1"), (2, "1, x, y"), (2, "1, x, y, x*y"), (3, "1, z")]:
        o = make_oi(n, text)
        assert is_border_basis_point(o, SchemePoint({}))
        ok, _ = oracle_is_border_basis(o, SchemePoint({}))
        assert ok


def test_known_non_point():
    # the prebasis {x^2, xy - 1, y^2} generates the unit ideal
    o = order_ideal_from_strings("1, x, y", U2)
    p = SchemePoint({(1, 2): 1})
    assert not is_border_basis_point(o, p)
    witness = first_violated_commutator(o, p)
    assert witness is not None
    ok, reason = oracle_is_border_basis(o, p)
    assert not ok
    assert "unit ideal" in reason


def test_known_point_on_scheme():
    # x = y, xy = 1, y^2 = 1 cuts out {(1,1), (-1,-1)} with basis {1, y}
    o = order_ideal_from_strings("1, y", U2)
    p = SchemePoint({(2, 1): 1, (1, 2): 1, (1, 3): 1})
    assert is_border_basis_point(o, p)
    ok, _ = oracle_is_border_basis(o, p)
    assert ok
    specialized = specialize_prebasis(o, p)
    assert [f.format() for f in specialized] == ["x - y", "y^2 - 1", "x*y - 1"]


def test_staircase_points_land_on_the_scheme():
    rng = random.Random(5)
    for n, text in [(2, "1, x"), (2, "1, x, y, x*y"), (3, "1, z")]:
        o = make_oi(n, text)
        for _ in range(5):
            p = staircase_point(o, rng)
            if p is None:
                continue
            assert is_border_basis_point(o, p)
            ok, why = oracle_is_border_basis(o, p)
            assert ok, why


def test_commutator_check_agrees_with_oracle_on_mixed_samples():
    rng_seed = 11
    for n, text in [(2, "1, x"), (2, "1, x, y"), (2, "1, y, y^2")]:
        o = make_oi(n, text)
        for p in sample_points(o, 40, rng_seed):
            assert is_border_basis_point(o, p) == oracle_is_border_basis(o, p)[0]


def test_point_json_round_trip():
    p = SchemePoint({(1, 2): Fraction(1, 3), (2, 1): Fraction(-2)})
    doc = p.to_json()
    assert doc == {"c": {"1,2": "1/3", "2,1": "-2"}}
    assert SchemePoint.from_json(doc) == p
    assert SchemePoint.from_json({"c": {}}) == SchemePoint({})
