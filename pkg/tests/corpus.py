"""Shared instance families and samplers used across the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from basisschemes import (Ideal, OrderIdealData, Polynomial, SchemePoint,
                          VariableUniverse, corners_of, order_ideal_from_strings,
                          ordering_from_name)


def x_universe(n: int) -> VariableUniverse:
    names = ["x", "y", "z"][:n] if n <= 3 else [f"x{k}" for k in range(1, n + 1)]
    return VariableUniverse.for_x(names)


def make_oi(n: int, text: str) -> OrderIdealData:
    return order_ideal_from_strings(text, x_universe(n))


# order ideals with n <= 3 and mu <= 6: the Prop 2.2 sampling corpus
POINT_CORPUS = [
    (1, "1, x, x^2"),
    (2, "1"),
    (2, "1, x"),
    (2, "1, y"),
    (2, "1, x, y"),
    (2, "1, x, y, x*y"),
    (2, "1, y, y^2"),
    (2, "1, x, y, x^2"),
    (2, "1, x, y, x^2, y^2"),
    (3, "1"),
    (3, "1, z"),
    (3, "1, x, y, z"),
    (3, "1, z, z^2"),
]

# (n, order ideal, sigma): instances for the homogeneity claims
SCHEME_CORPUS = [
    (2, "1", "lex"),
    (2, "1", "degrevlex"),
    (2, "1, x", "degrevlex"),
    (2, "1, y", "lex"),
    (2, "1, x, y", "deglex"),
    (2, "1, x, y", "lex"),
    (2, "1, x, y, x*y", "degrevlex"),
    (2, "1, x, y, x*y", "deglex"),
    (2, "1, y, y^2", "lex"),
    (2, "1, x, y, x^2", "degrevlex"),
    (2, "1, x, y, x^2, y^2", "deglex"),
    (3, "1", "deglex"),
    (3, "1, z", "lex"),
    (3, "1, z, z^2", "degrevlex"),
    (3, "1, x, y, z", "deglex"),
]

# instances whose scheme-ideal reduced bases are cheap enough to compare
ROUTE_CORPUS = [
    (2, "1", "lex"),
    (2, "1", "degrevlex"),
    (2, "1, x", "degrevlex"),
    (2, "1, y", "lex"),
    (2, "1, x, y", "deglex"),
    (2, "1, x, y", "lex"),
    (2, "1, x, y, x*y", "degrevlex"),
    (2, "1, x, y, x*y", "deglex"),
    (2, "1, y, y^2", "lex"),
    (2, "1, x, y, x^2", "degrevlex"),
    (3, "1", "deglex"),
    (3, "1, z", "lex"),
    (3, "1, z, z^2", "degrevlex"),
]


def oracle_eligible(odata: OrderIdealData) -> bool:
    return odata.mu * odata.nu <= 12


def sigma_for(odata: OrderIdealData, name: str):
    return ordering_from_name(odata.u, name)


# -- exact linear algebra ----------------------------------------------------------


def solve_square(matrix: list[list[Fraction]],
                 rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve M x = rhs exactly; None if M is singular."""
    n = len(matrix)
    m = [row[:] + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        inv = Fraction(1) / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


# -- point samplers ------------------------------------------------------------------


def small_fraction(rng: random.Random) -> Fraction:
    num = rng.randint(-4, 4)
    den = rng.choice([1, 1, 1, 2, 3])
    return Fraction(num, den)


def random_grid_point(odata: OrderIdealData, rng: random.Random,
                      density: float = 0.4) -> SchemePoint:
    values = {}
    for j in range(1, odata.nu + 1):
        for i in range(1, odata.mu + 1):
            if rng.random() < density:
                v = small_fraction(rng)
                if v:
                    values[(i, j)] = v
    return SchemePoint(values)


def staircase_point(odata: OrderIdealData,
                    rng: random.Random) -> SchemePoint | None:
    """A guaranteed border basis point: border coefficients of the
    vanishing ideal of a staircase-shaped grid of rational points.

    Built by exact linear algebra only, independent of any Groebner
    machinery.  Returns None when the sampled grid is degenerate.
    """
    n = len(odata.u.names)
    max_exp = max((max(t.e) for t in odata.terms), default=0)
    axes = []
    for _ in range(n):
        vals = []
        while len(vals) < max_exp + 1:
            v = Fraction(rng.randint(-6, 6), rng.choice([1, 2]))
            if v not in vals:
                vals.append(v)
        axes.append(vals)
    points = [tuple(axes[k][t.e[k]] for k in range(n)) for t in odata.terms]
    if len(set(points)) != len(points):
        return None

    def ev(term, pt):
        v = Fraction(1)
        for k, a in enumerate(term.e):
            v *= pt[k] ** a
        return v

    matrix = [[ev(t, pt) for t in odata.terms] for pt in points]
    values = {}
    for j, b in enumerate(odata.border, start=1):
        rhs = [ev(b, pt) for pt in points]
        sol = solve_square(matrix, rhs)
        if sol is None:
            return None
        for i, c in enumerate(sol, start=1):
            if c:
                values[(i, j)] = c
    return SchemePoint(values)


def perturbed_point(point: SchemePoint, odata: OrderIdealData,
                    rng: random.Random) -> SchemePoint:
    values = dict(point.values)
    i = rng.randint(1, odata.mu)
    j = rng.randint(1, odata.nu)
    values[(i, j)] = values.get((i, j), Fraction(0)) + Fraction(1, 2)
    return SchemePoint(values)


def sample_points(odata: OrderIdealData, count: int,
                  seed: int) -> list[SchemePoint]:
    """Deterministic mixed bag: the origin, guaranteed border basis
    points, perturbations of those, and random sparse assignments."""
    rng = random.Random(seed)
    out = [SchemePoint({})]
    while len(out) < count:
        kind = rng.random()
        if kind < 0.25:
            p = staircase_point(odata, rng)
            if p is not None:
                out.append(p)
        elif kind < 0.45:
            p = staircase_point(odata, rng)
            if p is not None:
                out.append(perturbed_point(p, odata, rng))
        else:
            out.append(random_grid_point(odata, rng))
    return out[:count]


# -- random order ideals and zero-dimensional ideals -----------------------------------


def random_order_ideal(universe: VariableUniverse, rng: random.Random,
                       max_mu: int) -> OrderIdealData:
    """Grow an order ideal by repeatedly absorbing a random corner."""
    from basisschemes import validate_order_ideal

    terms = [universe.one()]
    target = rng.randint(1, max_mu)
    while len(terms) < target:
        frontier = corners_of(terms, universe)
        terms.append(rng.choice(frontier))
    return validate_order_ideal(terms, universe)


def random_linear_form(u: VariableUniverse, rng: random.Random) -> Polynomial:
    while True:
        coeffs = [small_fraction(rng) for _ in u.names]
        if any(coeffs):
            break
    f = Polynomial.constant(u, small_fraction(rng))
    for name, c in zip(u.names, coeffs):
        f = f + Polynomial.variable(u, name).scale(c)
    return f


def random_zero_dim_ideal(rng: random.Random) -> tuple[Ideal, int]:
    """Products of generic affine-linear forms plus a small perturbation;
    zero-dimensional of colength <= 6 in two variables (generically)."""
    u = x_universe(2)
    d1, d2 = rng.choice([(1, 1), (1, 2), (2, 2), (1, 3), (2, 3), (1, 4)])
    f = Polynomial.constant(u, 1)
    for _ in range(d1):
        f = f * random_linear_form(u, rng)
    g = Polynomial.constant(u, 1)
    for _ in range(d2):
        g = g * random_linear_form(u, rng)
    if rng.random() < 0.5:
        bump = rng.choice([t for t, _ in
                           Polynomial.constant(u, 1).terms()])
        g = g + Polynomial.from_term(bump, Fraction(1, rng.randint(2, 5)))
    return Ideal(u, [f, g]), d1 * d2
