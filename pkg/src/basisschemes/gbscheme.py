"""Everything depending on a term ordering sigma: variable splits, the
generic Groebner prebasis, weight systems, the construction routes for
the scheme ideal, cornercut predicates, affine cell detection, the
point/ideal dictionary, and flat degeneration families."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .borderscheme import (SchemePoint, border_scheme_ideal, coefficient_universe,
                           first_violated_commutator, full_grid,
                           multiplication_matrix, specialize_prebasis)
from .errors import (InvariantViolationError, NotAPointError, PreconditionError)
from .groebner import (Ideal, ResourceLimits, eliminate, find_linear_solvable,
                       leading_term_ideal)
from .orderings import SigmaBar, TermOrdering
from .orderideals import OrderIdealData
from .poly import Polynomial, divide
from .universe import Term, VariableUniverse, c_name


# -- variable splits ---------------------------------------------------------------


@dataclass(frozen=True)
class SchemeVars:
    """Partition of the c-grid by whether b_j exceeds t_i under sigma."""

    S: frozenset[tuple[int, int]]
    L: frozenset[tuple[int, int]]
    S_corner: frozenset[tuple[int, int]]
    L_corner: frozenset[tuple[int, int]]

    @property
    def s(self) -> int:
        return len(self.S_corner)


def split_variables(odata: OrderIdealData, sigma: TermOrdering) -> SchemeVars:
    if sigma.u != odata.u:
        raise PreconditionError("sigma must be an ordering on the x-variables")
    S, L = set(), set()
    for j, b in enumerate(odata.border, start=1):
        for i, t in enumerate(odata.terms, start=1):
            (S if sigma.greater(b, t) else L).add((i, j))
    corner_cols = set(range(1, odata.eta + 1))
    return SchemeVars(
        frozenset(S), frozenset(L),
        frozenset(ij for ij in S if ij[1] in corner_cols),
        frozenset(ij for ij in L if ij[1] in corner_cols),
    )


def is_sigma_cornercut(odata: OrderIdealData, sigma: TermOrdering) -> bool:
    return all(sigma.greater(b, t) for b in odata.corners for t in odata.terms)


def is_V_cornercut(odata: OrderIdealData, v_weights: Mapping[str, int]) -> bool:
    return all(b.weighted_degree(v_weights) > t.weighted_degree(v_weights)
               for b in odata.corners for t in odata.terms)


def has_maxdeg_border(odata: OrderIdealData, v_weights: Mapping[str, int]) -> bool:
    return all(b.weighted_degree(v_weights) >= t.weighted_degree(v_weights)
               for b in odata.corners for t in odata.terms)


# -- generic prebasis under sigma -----------------------------------------------------


def generic_gb_prebasis(odata: OrderIdealData, sigma: TermOrdering,
                        universe: VariableUniverse | None = None
                        ) -> tuple[Polynomial, ...]:
    """g_j^* = b_j - sum over {i : b_j > t_i} of c[i,j]*t_i, for all border
    columns; the first eta entries form the generic Groebner prebasis."""
    from .borderscheme import prebasis_universe

    sv = split_variables(odata, sigma)
    u = universe or prebasis_universe(odata)
    out = []
    for j, b in enumerate(odata.border, start=1):
        d = {b.convert(u).e: Fraction(1)}
        for i, t in enumerate(odata.terms, start=1):
            if (i, j) in sv.S:
                e = t.convert(u).mul(u.variable_term(c_name(i, j))).e
                d[e] = Fraction(-1)
        out.append(Polynomial(u, d))
    return tuple(out)


# -- weight systems -------------------------------------------------------------------


@dataclass(frozen=True)
class WeightSystem:
    """Positive weights: V on the x-variables, W on the corner-column grid
    positions, Wbar extending W to every position with b_j > t_i."""

    V: dict[str, int]
    W: dict[tuple[int, int], int]
    Wbar: dict[tuple[int, int], int]

    def w_names(self) -> dict[str, int]:
        return {c_name(i, j): w for (i, j), w in self.W.items()}

    def wbar_names(self) -> dict[str, int]:
        return {c_name(i, j): w for (i, j), w in self.Wbar.items()}

    def to_json(self) -> dict:
        return {
            "V": dict(self.V),
            "W": {f"{i},{j}": w for (i, j), w in sorted(self.W.items())},
            "Wbar": {f"{i},{j}": w for (i, j), w in sorted(self.Wbar.items())},
        }


def _weight_constraints(odata: OrderIdealData,
                        sv: SchemeVars) -> list[tuple[int, ...]]:
    diffs = []
    for (i, j) in sv.S:
        b, t = odata.border[j - 1], odata.terms[i - 1]
        diffs.append(tuple(x - y for x, y in zip(b.e, t.e)))
    return sorted(set(diffs))


def _feasible_rational_weights(diffs: Sequence[tuple[int, ...]],
                               n: int) -> list[Fraction]:
    """Fourier-Motzkin: find v with v_k >= 1 and d . v >= 1 for all d."""
    cons: list[tuple[list[Fraction], Fraction]] = []
    for d in diffs:
        cons.append(([Fraction(a) for a in d], Fraction(1)))
    for k in range(n):
        unit = [Fraction(0)] * n
        unit[k] = Fraction(1)
        cons.append((unit, Fraction(1)))
    stages = []
    for k in range(n - 1, 0, -1):
        lows = [(a, b) for a, b in cons if a[k] > 0]
        ups = [(a, b) for a, b in cons if a[k] < 0]
        rest = [(a, b) for a, b in cons if a[k] == 0]
        new = list(rest)
        for al, bl in lows:
            for au, bu in ups:
                coef = [al[i] * (-au[k]) + au[i] * al[k] for i in range(n)]
                coef[k] = Fraction(0)
                new.append((coef, bl * (-au[k]) + bu * al[k]))
        stages.append((k, lows, ups))
        cons = new
    lower, upper = Fraction(1), None
    for a, b in cons:
        if a[0] > 0:
            lower = max(lower, b / a[0])
        elif a[0] < 0:
            bound = b / a[0]
            upper = bound if upper is None else min(upper, bound)
        elif b > 0:
            raise InvariantViolationError("weight system is infeasible")
    if upper is not None and lower > upper:
        raise InvariantViolationError("weight system is infeasible")
    v = [Fraction(0)] * n
    v[0] = lower
    for k, lows, ups in reversed(stages):
        lo = Fraction(1)
        for a, b in lows:
            lo = max(lo, (b - sum(a[i] * v[i] for i in range(n) if i != k)) / a[k])
        for a, b in ups:
            hi = (b - sum(a[i] * v[i] for i in range(n) if i != k)) / a[k]
            if lo > hi:
                raise InvariantViolationError("weight back-substitution failed")
        v[k] = lo
    return v


def find_weights(odata: OrderIdealData, sigma: TermOrdering,
                 scan_cap: int | None = None) -> WeightSystem:
    """Positive integer weights making every g_j^* weighted-homogeneous.

    V is found by scanning integer vectors in increasing max-entry order
    (lexicographic within a max-entry level); each grid weight is then the
    degree difference deg_V(b_j) - deg_V(t_i)."""
    sv = split_variables(odata, sigma)
    diffs = _weight_constraints(odata, sv)
    n = len(odata.u.names)
    max_border_degree = max((b.total_degree() for b in odata.border), default=1)
    cap = scan_cap if scan_cap is not None else max(4 * odata.mu * max_border_degree, 4)

    def satisfies(v: Sequence[int]) -> bool:
        return all(sum(a * w for a, w in zip(d, v)) >= 1 for d in diffs)

    found: Sequence[int] | None = None
    budget = 2_000_000
    for top in range(1, cap + 1):
        if budget <= 0 or found:
            break
        for vec in itertools.product(range(1, top + 1), repeat=n):
            budget -= 1
            if budget <= 0:
                break
            if max(vec) == top and satisfies(vec):
                found = vec
                break
    if found is None:
        rat = _feasible_rational_weights(diffs, n)
        scale = 1
        for q in rat:
            scale = scale * q.denominator // __import__("math").gcd(scale, q.denominator)
        found = tuple(int(q * scale) for q in rat)
        if not satisfies(found):
            raise InvariantViolationError("scaled rational weights fail the constraints")
    V = {name: w for name, w in zip(odata.u.names, found)}

    def diff_weight(i: int, j: int) -> int:
        w = (odata.border[j - 1].weighted_degree(V)
             - odata.terms[i - 1].weighted_degree(V))
        if w <= 0:
            raise InvariantViolationError(
                f"non-positive weight at position ({i},{j})")
        return w

    W = {(i, j): diff_weight(i, j) for (i, j) in sv.S_corner}
    Wbar = {(i, j): diff_weight(i, j) for (i, j) in sv.S}
    return WeightSystem(V, W, Wbar)


# -- the sigma-bar division universe ---------------------------------------------------


def corner_universe(odata: OrderIdealData, sv: SchemeVars,
                    include_x: bool) -> VariableUniverse:
    return VariableUniverse.build(
        odata.u.names if include_x else (), sorted(sv.S_corner))


def split_universe(odata: OrderIdealData, sv: SchemeVars,
                   include_x: bool) -> VariableUniverse:
    return VariableUniverse.build(
        odata.u.names if include_x else (), sorted(sv.S))


def sigma_bar_ordering(odata: OrderIdealData, sigma: TermOrdering,
                       ws: WeightSystem, universe: VariableUniverse) -> SigmaBar:
    return SigmaBar(universe, ws.V, ws.w_names(), sigma)


def _corner_prebasis(odata: OrderIdealData, sv: SchemeVars,
                     universe: VariableUniverse) -> tuple[Polynomial, ...]:
    out = []
    for j in range(1, odata.eta + 1):
        b = odata.border[j - 1]
        d = {b.convert(universe).e: Fraction(1)}
        for i, t in enumerate(odata.terms, start=1):
            if (i, j) in sv.S:
                e = t.convert(universe).mul(universe.variable_term(c_name(i, j))).e
                d[e] = Fraction(-1)
        out.append(Polynomial(universe, d))
    return tuple(out)


def _split_by_interior(odata: OrderIdealData, poly: Polynomial,
                       c_universe: VariableUniverse) -> dict[int, Polynomial]:
    """Write a polynomial with O-supported x-part as sum_i r_i * t_i and
    return {i: r_i} with r_i over the c-only universe."""
    u = poly.u
    x_idx = [u.index_of(n) for n in odata.u.names]
    interior = {t.e: i for i, t in enumerate(odata.terms, start=1)}
    by_i: dict[int, dict[tuple[int, ...], Fraction]] = {}
    width = len(c_universe.names)
    c_map = [c_universe.index_of(n) if n in c_universe else None
             for n in u.names]
    for e, coeff in poly.exponent_items():
        x_part = tuple(e[k] for k in x_idx)
        i = interior.get(x_part)
        if i is None:
            raise InvariantViolationError(
                f"term with x-part outside the order ideal: {Term(u, e).format()}")
        c_part = [0] * width
        for k, a in enumerate(e):
            if a and k not in x_idx:
                target = c_map[k]
                if target is None:
                    raise InvariantViolationError(
                        f"unexpected variable {u.names[k]} in a collected coefficient")
                c_part[target] = a
        d = by_i.setdefault(i, {})
        key = tuple(c_part)
        d[key] = d.get(key, Fraction(0)) + coeff
    return {i: Polynomial(c_universe, d) for i, d in by_i.items()}


def h_polynomials(odata: OrderIdealData, sigma: TermOrdering,
                  ws: WeightSystem | None = None
                  ) -> dict[tuple[int, int], Polynomial]:
    """For each non-corner border term b_j, the coefficients h[i,j] of its
    normal form sum_i h[i,j]*t_i under sigma-bar division by the corner
    prebasis; every h is weighted-homogeneous of degree Wbar[i,j]."""
    sv = split_variables(odata, sigma)
    ws = ws or find_weights(odata, sigma)
    u_xc = corner_universe(odata, sv, include_x=True)
    u_c = corner_universe(odata, sv, include_x=False)
    gstars = _corner_prebasis(odata, sv, u_xc)
    sbar = sigma_bar_ordering(odata, sigma, ws, u_xc)
    out: dict[tuple[int, int], Polynomial] = {}
    for j in range(odata.eta + 1, odata.nu + 1):
        b = odata.border[j - 1].convert(u_xc)
        _, r = divide(Polynomial.from_term(b), gstars, sbar)
        parts = _split_by_interior(odata, r, u_c)
        for i in range(1, odata.mu + 1):
            if (i, j) not in sv.S:
                if i in parts:
                    raise InvariantViolationError(
                        f"remainder hits t_{i} although b_{j} is not above it")
                continue
            h = parts.get(i, Polynomial.zero(u_c))
            if not h.is_zero:
                deg = h.homogeneous_degree(ws.w_names())
                if deg is None or deg != ws.Wbar[(i, j)]:
                    raise InvariantViolationError(
                        f"h[{i},{j}] is not homogeneous of degree {ws.Wbar[(i, j)]}")
            out[(i, j)] = h
    return out


# -- scheme ideal routes -----------------------------------------------------------------


class Route(enum.Enum):
    SUBSTITUTION = "substitution"
    REDUCTION = "reduction"
    ELIMINATION_ORACLE = "elimination"


def gb_scheme_ideal(odata: OrderIdealData, sigma: TermOrdering,
                    route: Route = Route.SUBSTITUTION,
                    reducer_policy: str = "min",
                    pair_order: str = "asc",
                    limits: ResourceLimits | None = None) -> Ideal:
    """Defining ideal of the Groebner basis scheme in the corner-column
    grid variables, by one of three provably-agreeing constructions."""
    sv = split_variables(odata, sigma)
    u_cs = corner_universe(odata, sv, include_x=False)

    if route is Route.SUBSTITUTION:
        ib = border_scheme_ideal(odata)
        u_c = ib.u
        h = h_polynomials(odata, sigma)
        rules: dict[str, Polynomial | Fraction] = {}
        for (i, j) in sv.L:
            rules[c_name(i, j)] = Fraction(0)
        for (i, j), hij in h.items():
            rules[c_name(i, j)] = hij.convert(u_c)
        gens, seen = [], set()
        for g in ib.generators:
            s = g.substitute(rules)
            if not s.is_zero:
                s = s.convert(u_cs)
                if s not in seen:
                    seen.add(s)
                    gens.append(s)
        return Ideal(u_cs, gens)

    if route is Route.REDUCTION:
        ws = find_weights(odata, sigma)
        u_xc = corner_universe(odata, sv, include_x=True)
        gstars = _corner_prebasis(odata, sv, u_xc)
        sbar = sigma_bar_ordering(odata, sigma, ws, u_xc)
        if reducer_policy == "min":
            divisors = list(gstars)
        elif reducer_policy == "max":
            divisors = list(reversed(gstars))
        else:
            raise ValueError(f"unknown reducer policy {reducer_policy!r}")
        pairs = list(itertools.combinations(range(odata.eta), 2))
        if pair_order == "desc":
            pairs.reverse()
        elif pair_order != "asc":
            raise ValueError(f"unknown pair order {pair_order!r}")
        gens, seen = [], set()
        for a, b in pairs:
            ba = odata.border[a].convert(u_xc)
            bb = odata.border[b].convert(u_xc)
            lead = ba.lcm(bb)
            s = (gstars[a].mul_term(lead.div(ba))
                 - gstars[b].mul_term(lead.div(bb)))
            _, r = divide(s, divisors, sbar)
            for _, coeff_poly in sorted(
                    _split_by_interior(odata, r, u_cs).items()):
                if not coeff_poly.is_zero and coeff_poly not in seen:
                    seen.add(coeff_poly)
                    gens.append(coeff_poly)
        return Ideal(u_cs, gens)

    if route is Route.ELIMINATION_ORACLE:
        ib = border_scheme_ideal(odata)
        u_c = ib.u
        l_gens = [Polynomial.variable(u_c, c_name(i, j)) for (i, j) in sorted(sv.L)]
        big = Ideal(u_c, l_gens + list(ib.generators))
        keep = [c_name(i, j) for (i, j) in sorted(sv.S_corner)]
        small = eliminate(big, keep, limits)
        return Ideal(u_cs, [g.convert(u_cs) for g in small.generators])

    raise ValueError(f"unknown route {route!r}")


# -- homogeneity verification ----------------------------------------------------------


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    description: str
    passed: bool
    witness: str | None = None

    def to_json(self) -> dict:
        return {"claim": self.claim, "description": self.description,
                "passed": self.passed, "witness": self.witness}


@dataclass(frozen=True)
class HomogeneityReport:
    claims: tuple[ClaimResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def to_json(self) -> dict:
        return {"all_passed": self.all_passed,
                "claims": [c.to_json() for c in self.claims]}


def _check_all(claim: str, description: str, gens: Sequence[Polynomial],
               weights: Mapping[str, int]) -> ClaimResult:
    for g in gens:
        if g.homogeneous_degree(weights) is None:
            return ClaimResult(claim, description, False, g.format())
    return ClaimResult(claim, description, True)


def verify_homogeneity(odata: OrderIdealData, sigma: TermOrdering,
                       ws: WeightSystem,
                       limits: ResourceLimits | None = None) -> HomogeneityReport:
    """Check the four graded-structure claims generator by generator."""
    sv = split_variables(odata, sigma)
    u_cs = corner_universe(odata, sv, include_x=False)
    u_xcs = corner_universe(odata, sv, include_x=True)
    u_so = split_universe(odata, sv, include_x=False)
    u_xso = split_universe(odata, sv, include_x=True)

    ig = gb_scheme_ideal(odata, sigma, Route.SUBSTITUTION, limits=limits)
    gstars_corner = _corner_prebasis(odata, sv, u_xcs)

    ib = border_scheme_ideal(odata)
    kill = {c_name(i, j): Fraction(0) for (i, j) in sv.L}
    killed = []
    for g in ib.generators:
        s = g.substitute(kill)
        if not s.is_zero:
            killed.append(s.convert(u_so))

    gstars_all = generic_gb_prebasis(odata, sigma)
    gstars_so = [g.convert(u_xso) for g in gstars_all]

    w = ws.w_names()
    vw = {**ws.V, **w}
    wbar = ws.wbar_names()
    vwbar = {**ws.V, **wbar}

    claims = (
        _check_all("b", "scheme ideal is W-homogeneous",
                   [g for g in ig.generators], w),
        _check_all("c", "scheme ideal plus corner prebasis is (V,W)-homogeneous",
                   [g.convert(u_xcs) for g in ig.generators] + list(gstars_corner),
                   vw),
        _check_all("d", "commutator ideal modulo the zero positions is "
                        "Wbar-homogeneous", killed, wbar),
        _check_all("e", "commutator ideal plus full prebasis modulo the zero "
                        "positions is (V,Wbar)-homogeneous",
                   [g.convert(u_xso) for g in killed] + gstars_so, vwbar),
    )
    return HomogeneityReport(claims)


# -- affine cell detection ---------------------------------------------------------------


@dataclass(frozen=True)
class CellResult:
    is_affine_space: bool
    free_variables: tuple[str, ...]
    eliminated: tuple[str, ...]
    residual: Ideal | None

    def to_json(self) -> dict:
        doc = {"is_affine_space": self.is_affine_space,
               "free_variables": list(self.free_variables),
               "eliminated": list(self.eliminated)}
        if self.residual is not None:
            doc["residual_generators"] = [g.to_json()
                                          for g in self.residual.generators]
        return doc


def affine_cell_detect(ideal: Ideal, weights: Mapping[str, int]) -> CellResult:
    """Iteratively eliminate variables that occur linearly-and-alone in a
    homogeneous generator; the scheme is an affine space iff nothing is
    left."""
    for name in ideal.u.names:
        if name not in weights or weights[name] <= 0:
            raise PreconditionError(f"missing or non-positive weight for {name!r}")
    for g in ideal.generators:
        if g.homogeneous_degree(weights) is None:
            raise PreconditionError(
                f"generator {g.format()} is not homogeneous for the given weights")
    gens = [g for g in ideal.generators if not g.is_zero]
    universe = ideal.u
    eliminated: list[str] = []
    while True:
        hit = None
        for k, g in enumerate(gens):
            found = find_linear_solvable(g)
            if found:
                hit = (k, *found)
                break
        if hit is None:
            break
        k, name, rhs = hit
        rule = {name: rhs}
        gens = [h.substitute(rule) for i, h in enumerate(gens) if i != k]
        gens = [h for h in gens if not h.is_zero]
        eliminated.append(name)
    remaining = [n for n in universe.names if n not in eliminated]
    target = universe.restrict(remaining)
    if not gens:
        return CellResult(True, tuple(remaining), tuple(eliminated), None)
    residual = Ideal(target, [g.convert(target) for g in gens])
    return CellResult(False, tuple(remaining), tuple(eliminated), residual)


# -- points and ideals --------------------------------------------------------------------


def evaluate_at_point(poly: Polynomial, point: SchemePoint) -> Fraction:
    """Evaluate a polynomial in grid variables at a scheme point."""
    total = Fraction(0)
    positions = [poly.u.positions.get(n) for n in poly.u.names]
    for e, coeff in poly.exponent_items():
        value = coeff
        for k, a in enumerate(e):
            if a:
                pos = positions[k]
                if pos is None:
                    raise PreconditionError(
                        f"cannot evaluate non-grid variable {poly.u.names[k]!r}")
                value *= point.value(*pos) ** a
                if value == 0:
                    break
        total += value
    return total


def _generic_commutator_entry(odata: OrderIdealData, k: int, l: int,
                              row: int, col: int) -> Polynomial:
    u = coefficient_universe(odata)
    ak = multiplication_matrix(odata, k, u)
    al = multiplication_matrix(odata, l, u)
    mu = odata.mu
    acc = Polynomial.zero(u)
    for m in range(mu):
        acc = acc + ak[(row - 1, m)] * al[(m, col - 1)]
        acc = acc - al[(row - 1, m)] * ak[(m, col - 1)]
    return acc


def expand_point(odata: OrderIdealData, sigma: TermOrdering,
                 point: SchemePoint,
                 h: Mapping[tuple[int, int], Polynomial] | None = None
                 ) -> SchemePoint:
    """Extend a corner-column point to the full grid: zero on the forced
    positions, h[i,j] evaluated at the point elsewhere."""
    sv = split_variables(odata, sigma)
    bad = set(point.values) - set(sv.S_corner)
    if bad:
        i, j = sorted(bad)[0]
        raise NotAPointError(
            f"coordinate c[{i},{j}] is outside the free corner-column positions")
    h = h if h is not None else h_polynomials(odata, sigma)
    values = dict(point.values)
    for (i, j), hij in h.items():
        v = evaluate_at_point(hij, point)
        if v:
            values[(i, j)] = v
    return SchemePoint(values)


def ideal_from_point(odata: OrderIdealData, sigma: TermOrdering,
                     point: SchemePoint,
                     limits: ResourceLimits | None = None
                     ) -> tuple[Polynomial, ...]:
    """The reduced sigma-Groebner basis obtained by specializing the
    generic Groebner prebasis at a point of the scheme."""
    full = expand_point(odata, sigma, point)
    witness = first_violated_commutator(odata, full)
    if witness is not None:
        k, l, r, c, value = witness
        gen = _generic_commutator_entry(odata, k, l, r, c)
        raise NotAPointError(
            "the assignment is not a point of the scheme",
            witness=f"{gen.format()} evaluates to {value}")
    specialized = list(specialize_prebasis(odata, full)[:odata.eta])
    specialized.sort(key=lambda g: sigma.key(g.leading(sigma)[0]))
    return tuple(specialized)


def point_from_ideal(ideal: Ideal, sigma: TermOrdering,
                     limits: ResourceLimits | None = None
                     ) -> tuple[OrderIdealData, SchemePoint]:
    """Order ideal of the quotient and full-grid border coefficients of a
    zero-dimensional ideal: the inverse of ideal_from_point."""
    lt = leading_term_ideal(ideal, sigma, limits)
    if lt.is_unit:
        raise PreconditionError("the unit ideal corresponds to no scheme point")
    odata = lt.complement_order_ideal()
    if odata is None:
        raise PreconditionError("the ideal is not zero-dimensional")
    gb = ideal.groebner_basis(sigma, limits)
    values: dict[tuple[int, int], Fraction] = {}
    interior = {t.e: i for i, t in enumerate(odata.terms, start=1)}
    for j, b in enumerate(odata.border, start=1):
        nf = divide(Polynomial.from_term(b), gb, sigma)[1]
        for e, coeff in nf.exponent_items():
            i = interior.get(e)
            if i is None:
                raise InvariantViolationError(
                    "normal form escaped the complement of the leading terms")
            values[(i, j)] = coeff
    point = SchemePoint(values)
    sv = split_variables(odata, sigma)
    for (i, j) in sv.L:
        if point.value(i, j) != 0:
            raise InvariantViolationError(
                f"nonzero coordinate at forced-zero position ({i},{j})")
    return odata, point


# -- flat degeneration families --------------------------------------------------------------


@dataclass(frozen=True)
class DeformationFamily:
    """One-parameter family scaling each coordinate a[i,j] by t^W[i,j]."""

    odata: OrderIdealData
    sigma_descriptor: dict
    point: SchemePoint
    weights: WeightSystem
    universe: VariableUniverse
    generators: tuple[Polynomial, ...]

    def to_json(self) -> dict:
        return {
            "variables": list(self.universe.names),
            "point": self.point.to_json(),
            "weights": self.weights.to_json(),
            "generators": [g.to_json() for g in self.generators],
        }


def deform(odata: OrderIdealData, sigma: TermOrdering, ws: WeightSystem,
           point: SchemePoint,
           limits: ResourceLimits | None = None) -> DeformationFamily:
    """Family b_j - sum_i t^W[i,j] * a[i,j] * t_i over K[x, t]; the fiber
    at 1 is the point's ideal, the fiber at 0 the corner monomial ideal."""
    ideal_from_point(odata, sigma, point, limits)  # rejects off-scheme points
    sv = split_variables(odata, sigma)
    u_xt = VariableUniverse.build(odata.u.names, (), include_t=True)
    t_var = u_xt.t_name
    gens = []
    for j in range(1, odata.eta + 1):
        b = odata.border[j - 1]
        d = {b.convert(u_xt).e: Fraction(1)}
        for i, t in enumerate(odata.terms, start=1):
            if (i, j) in sv.S_corner:
                a = point.value(i, j)
                if a:
                    e = t.convert(u_xt).mul(
                        u_xt.term({t_var: ws.W[(i, j)]})).e
                    d[e] = d.get(e, Fraction(0)) - a
        gens.append(Polynomial(u_xt, d))
    return DeformationFamily(odata, sigma.descriptor(), point, ws, u_xt,
                             tuple(gens))


def fiber(family: DeformationFamily, t0: Fraction | int) -> Ideal:
    """Specialize the deformation parameter to a rational value."""
    t_var = family.universe.t_name
    target = family.odata.u
    gens = [g.substitute({t_var: Fraction(t0)}).convert(target)
            for g in family.generators]
    return Ideal(target, gens)
