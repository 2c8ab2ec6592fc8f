import random

import pytest

from basisschemes import (DivisorClosureError, PreconditionError,
                          VariableUniverse, border_of, corners_of,
                          order_ideal_from_strings, segment_order_ideal,
                          validate_order_ideal)
from corpus import random_order_ideal, x_universe

U2 = VariableUniverse.for_x(["x", "y"])


def test_indexing_of_standard_square():
    o = order_ideal_from_strings("1, x, y, x*y", U2)
    assert [t.format() for t in o.terms] == ["1", "x", "y", "x*y"]
    assert [b.format() for b in o.border] == ["x^2", "y^2", "x^2*y", "x*y^2"]
    assert [b.format() for b in o.corners] == ["x^2", "y^2"]
    assert (o.mu, o.nu, o.eta) == (4, 4, 2)


def test_simplex_border_equals_corners():
    o = order_ideal_from_strings("1, x, y", U2)
    assert [b.format() for b in o.border] == ["x^2", "x*y", "y^2"]
    assert o.eta == o.nu == 3


def test_square_example_corners():
    o = order_ideal_from_strings("1, x, y, x^2, y^2", U2)
    assert {b.format() for b in o.corners} == {"x*y", "x^3", "y^3"}
    assert (o.mu, o.nu, o.eta) == (5, 5, 3)


def test_missing_divisor_is_reported():
    with pytest.raises(DivisorClosureError) as err:
        validate_order_ideal(["1", "x*y"], U2)
    assert "x*y" in str(err.value)
    assert err.value.missing in ("x", "y")


def test_single_term_order_ideal_in_two_variables():
    o = validate_order_ideal(["1"], U2)
    assert [b.format() for b in o.border] == ["x", "y"]
    assert o.eta == 2


def test_empty_input_rejected():
    with pytest.raises(PreconditionError):
        validate_order_ideal([], U2)


def test_segments_have_exactly_n_corners():
    for n in (1, 2, 3, 4):
        u = x_universe(n)
        for mu in (1, 2, 4):
            seg = segment_order_ideal(u, mu)
            assert seg.eta == n if mu > 1 else seg.eta == n
            # corners: every variable but the last, plus last^mu
            corner_sets = {b.format() for b in seg.corners}
            assert len(corner_sets) == n


def _brute_force_corners(terms, universe):
    """Independent oracle: a monomial m is a corner iff m is outside O
    and every immediate divisor of m is inside O."""
    inside = {t.e for t in terms}
    width = len(universe.names)
    bound = max(max(t.e) for t in terms) + 2
    out = []
    for e in _box(width, bound):
        if e in inside:
            continue
        ok = True
        for k in range(width):
            if e[k]:
                d = e[:k] + (e[k] - 1,) + e[k + 1:]
                if d not in inside:
                    ok = False
                    break
        if ok:
            out.append(e)
    return sorted(out)


def _box(width, bound):
    if width == 0:
        yield ()
        return
    for e in _box(width - 1, bound):
        for a in range(bound):
            yield e + (a,)


def test_corners_against_brute_force_on_random_order_ideals():
    rng = random.Random(2024)
    for n in (2, 3):
        u = x_universe(n)
        for _ in range(25):
            o = random_order_ideal(u, rng, max_mu=12)
            brute = _brute_force_corners(o.terms, u)
            assert sorted(b.e for b in o.corners) == brute


def test_border_structure_properties():
    rng = random.Random(99)
    for n in (2, 3):
        u = x_universe(n)
        for _ in range(15):
            o = random_order_ideal(u, rng, max_mu=10)
            interior = set(o.terms)
            assert o.eta >= 1 and o.nu >= o.eta
            for b in o.border:
                assert b not in interior
                assert any(
                    all(b.e[k] - t.e[k] == (1 if k == axis else 0)
                        for k in range(n))
                    for t in o.terms for axis in range(n))
            # border and corner helpers agree with the validated data
            assert border_of(o.terms, u) == tuple(
                sorted(o.border, key=lambda t: (t.total_degree(),
                                                tuple(-a for a in t.e))))
            assert set(corners_of(o.terms, u)) == set(o.corners)


def test_json_shape():
    o = order_ideal_from_strings("1, x", U2)
    doc = o.to_json()
    assert doc["mu"] == 2 and doc["eta"] == 2
    assert doc["terms"] == [{}, {"x": 1}]
