"""Buchberger engine: reduced Groebner bases, normal forms, elimination,
leading term ideals, and Krull dimension.

The public surface works with exact-rational polynomials; internally the
engine runs on content-stripped integer coefficient dictionaries to keep
arithmetic cheap.  Results are deterministic: the reduced basis is unique
and the pair selection, reducer choice, and tie-breaks are all fixed.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import (MalformedRulesError, PreconditionError, ResourceLimitError,
                     UniverseMismatchError)
from .orderings import DegRevLex, Elimination, TermOrdering, ordering_from_name
from .poly import Polynomial, divide
from .universe import Term, VariableUniverse


@dataclass(frozen=True)
class ResourceLimits:
    """Safety cutoffs; hitting one raises, it never truncates silently."""

    max_basis: int = 4000
    max_degree: int = 120


DEFAULT_LIMITS = ResourceLimits()

# Optional diagnostics hook: called as TRACE(basis_size, pending_pairs) after
# every basis addition when set.  Used by benchmarks; never by library code.
TRACE = None


# -- integer kernel -------------------------------------------------------------


def _content(d: dict) -> int:
    g = 0
    for c in d.values():
        g = gcd(g, c)
        if g == 1:
            return 1
    return g or 1


def _strip(d: dict) -> dict:
    g = _content(d)
    if g > 1:
        return {e: c // g for e, c in d.items()}
    return d


def _to_int_dict(p: Polynomial, key_of, pk: _Packing) -> dict:
    denom = 1
    for _, c in p.exponent_items():
        denom = denom * c.denominator // gcd(denom, c.denominator)
    d = {pk.pack(e): int(c * denom) for e, c in p.exponent_items()}
    d = _strip(d)
    if d and d[max(d, key=key_of)] < 0:
        d = {e: -c for e, c in d.items()}
    return d


def _negate_key(k):
    if isinstance(k, tuple):
        return tuple(_negate_key(v) for v in k)
    return -k


class _Packing:
    """Dense exponent tuples packed into a single integer, one fixed-width
    field per variable plus a guard bit: monomial product becomes integer
    addition, divisibility and componentwise max a few bit operations."""

    __slots__ = ("width", "bits", "shifts", "guard", "field", "low")

    def __init__(self, width: int, max_exponent: int):
        self.width = width
        self.bits = max(8, max_exponent.bit_length() + 2)
        self.shifts = tuple(k * self.bits for k in range(width))
        self.field = (1 << (self.bits - 1)) - 1
        self.guard = 0
        for s in self.shifts:
            self.guard |= 1 << (s + self.bits - 1)
        self.low = self.guard >> (self.bits - 1)

    def pack(self, e: tuple) -> int:
        p = 0
        for a, s in zip(e, self.shifts):
            p |= a << s
        return p

    def unpack(self, p: int) -> tuple:
        return tuple((p >> s) & self.field for s in self.shifts)

    def degree(self, p: int) -> int:
        return sum((p >> s) & self.field for s in self.shifts)

    def lcm(self, a: int, b: int) -> int:
        # per-field max: select fields of a where a_i >= b_i, else of b
        s = ((a | self.guard) - b) & self.guard
        mask = s - (s >> (self.bits - 1))
        return (a & mask) | (b & ~mask)


class _Work:
    __slots__ = ("d", "lt", "lc")

    def __init__(self, d: dict, key_of):
        self.d = d
        self.lt = max(d, key=key_of)
        self.lc = d[self.lt]


def _reduce_full(p: dict, basis: Sequence[_Work], packed_lts: list[int],
                 skip: int | None, neg_of, guard: int) -> dict:
    """Full normal form of p against the basis (packed integer kernel)."""
    tail: dict = {}
    heap = [(neg_of(e), e) for e in p]
    heapq.heapify(heap)
    push, pop = heapq.heappush, heapq.heappop
    get = p.get
    scalings = 0
    nbasis = len(packed_lts)
    while p:
        while True:
            _, lt = heap[0]
            if lt in p:
                break
            pop(heap)
        c = p[lt]
        ltg = lt | guard
        reducer = None
        for k in range(nbasis):
            if k != skip and (ltg - packed_lts[k]) & guard == guard:
                reducer = basis[k]
                break
        if reducer is None:
            tail[lt] = c
            del p[lt]
            pop(heap)
            continue
        h = gcd(c, reducer.lc)
        a, b = reducer.lc // h, c // h
        if a < 0:
            a, b = -a, -b
        if a != 1:
            for e in p:
                p[e] *= a
            for e in tail:
                tail[e] *= a
            scalings += 1
        m = lt - reducer.lt
        for eg, cg in reducer.d.items():
            t = eg + m
            old = get(t)
            if old is None:
                v = -b * cg
                p[t] = v
                push(heap, (neg_of(t), t))
            else:
                v = old - b * cg
                if v:
                    p[t] = v
                else:
                    del p[t]
        if scalings and scalings % 16 == 0:
            joint = _content(p) if not tail else gcd(_content(p), _content(tail))
            if joint > 1:
                for e in p:
                    p[e] //= joint
                for e in tail:
                    tail[e] //= joint
            scalings += 1
    return _strip(tail)


def _spoly(f: _Work, g: _Work, pk: _Packing) -> dict:
    l = pk.lcm(f.lt, g.lt)
    h = gcd(f.lc, g.lc)
    cf, cg = g.lc // h, f.lc // h
    mf, mg = l - f.lt, l - g.lt
    out = {e + mf: cf * c for e, c in f.d.items()}
    for e, c in g.d.items():
        t = e + mg
        v = out.get(t, 0) - cg * c
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


def _update_pairs(basis: list[_Work], pairs: dict, new: _Work, key_of,
                  deg_of, pk: _Packing):
    """Gebauer-Moeller pair update; ``pairs`` maps (i, j) -> packed lcm."""
    t = len(basis)
    ltf = new.lt
    guard = pk.guard
    lcm = pk.lcm
    kept = {}
    for (i, j), l in pairs.items():
        if (((l | guard) - ltf) & guard == guard
                and lcm(basis[i].lt, ltf) != l
                and lcm(basis[j].lt, ltf) != l):
            continue
        kept[(i, j)] = l
    by_lcm: dict[int, list[int]] = {}
    for i in range(t):
        by_lcm.setdefault(lcm(basis[i].lt, ltf), []).append(i)
    minimal: list[int] = []
    # divisors precede multiples in any degree-sorted sweep
    for l in sorted(by_lcm, key=deg_of):
        lg = l | guard
        if all((lg - m) & guard != guard for m in minimal):
            minimal.append(l)
    for l in minimal:
        members = by_lcm[l]
        if any(lcm(basis[i].lt, ltf) == basis[i].lt + ltf for i in members):
            continue  # coprime leading terms: S-polynomial reduces to zero
        kept[(min(members), t)] = l
    basis.append(new)
    return kept


def buchberger(generators: Iterable[Polynomial], ordering: TermOrdering,
               limits: ResourceLimits | None = None) -> tuple[Polynomial, ...]:
    """Unique reduced Groebner basis of the given generators.

    Normal selection strategy (minimal lcm degree, ordering tie-break)
    with the coprimality and chain criteria.  Raises
    :class:`ResourceLimitError` when a cutoff is exceeded.
    """
    limits = limits or DEFAULT_LIMITS
    gens = [g for g in generators if not g.is_zero]
    if not gens:
        return ()
    universe = gens[0].u
    if any(g.u != universe for g in gens):
        raise UniverseMismatchError("generators over different universes")
    if ordering.u != universe:
        raise UniverseMismatchError("ordering universe mismatch")
    if any(g.total_degree() > limits.max_degree for g in gens):
        raise ResourceLimitError("max_degree", limits.max_degree)

    pk = _Packing(len(universe.names), 2 * limits.max_degree)
    raw_key = ordering.tuple_key
    key_cache: dict[int, tuple] = {}
    neg_cache: dict[int, tuple] = {}

    def key_of(e, _c=key_cache, _raw=raw_key, _unpack=pk.unpack):
        k = _c.get(e)
        if k is None:
            k = _c[e] = _raw(_unpack(e))
        return k

    def neg_of(e, _c=neg_cache, _raw=raw_key, _unpack=pk.unpack):
        k = _c.get(e)
        if k is None:
            k = _c[e] = _negate_key(_raw(_unpack(e)))
        return k

    deg_cache: dict[int, int] = {}

    def deg_of(e, _c=deg_cache, _deg=pk.degree):
        d = _c.get(e)
        if d is None:
            d = _c[e] = _deg(e)
        return d

    basis: list[_Work] = []
    packed_lts: list[int] = []
    pairs: dict[tuple[int, int], int] = {}
    queue: list = []
    for g in sorted(gens, key=lambda q: raw_key(q.leading(ordering)[0].e)):
        d = _to_int_dict(g, key_of, pk)
        if d:
            pairs = _update_pairs(basis, pairs, _Work(d, key_of), key_of,
                                  deg_of, pk)
            packed_lts.append(basis[-1].lt)

    for ij, l in pairs.items():
        heapq.heappush(queue, (deg_of(l), key_of(l), ij))

    while pairs:
        _, _, (i, j) = heapq.heappop(queue)
        l = pairs.pop((i, j), None)
        if l is None:
            continue  # pruned by a criterion after being queued
        if deg_of(l) > limits.max_degree:
            raise ResourceLimitError("max_degree", limits.max_degree)
        s = _spoly(basis[i], basis[j], pk)
        r = _reduce_full(s, basis, packed_lts, None, neg_of, pk.guard)
        if r:
            if max(map(deg_of, r)) > limits.max_degree:
                raise ResourceLimitError("max_degree", limits.max_degree)
            if len(basis) + 1 > limits.max_basis:
                raise ResourceLimitError("max_basis", limits.max_basis)
            w = _Work(r if r[max(r, key=key_of)] > 0
                      else {e: -c for e, c in r.items()}, key_of)
            before = set(pairs)
            pairs = _update_pairs(basis, pairs, w, key_of, deg_of, pk)
            packed_lts.append(w.lt)
            for ij, l in pairs.items():
                if ij not in before:
                    heapq.heappush(queue, (deg_of(l), key_of(l), ij))
            if TRACE is not None:
                TRACE(len(basis), len(pairs))

    # minimalize: keep only elements whose leading term no other kept one divides
    guard = pk.guard
    order = sorted(range(len(basis)), key=lambda k: key_of(basis[k].lt))
    kept: list[int] = []
    for k in order:
        ltg = basis[k].lt | guard
        if not any((ltg - basis[m].lt) & guard == guard for m in kept):
            kept.append(k)
    minimal = [basis[k] for k in kept]
    minimal_lts = [g.lt for g in minimal]
    # interreduce tails and normalize to monic rational polynomials
    out = []
    for k, g in enumerate(minimal):
        r = _reduce_full(dict(g.d), minimal, minimal_lts, k, neg_of, guard)
        lc = r[max(r, key=key_of)]
        out.append(Polynomial(universe, {pk.unpack(e): Fraction(c, lc)
                                         for e, c in r.items()}))
    out.sort(key=lambda p: raw_key(p.leading(ordering)[0].e))
    return tuple(out)


# -- ideals ---------------------------------------------------------------------


class Ideal:
    """An ideal given by generators, with a reduced-GB cache per ordering."""

    def __init__(self, universe: VariableUniverse,
                 generators: Iterable[Polynomial]):
        self.u = universe
        gens = tuple(generators)
        for g in gens:
            if g.u != universe:
                raise UniverseMismatchError("generator over a different universe")
        self.generators = gens
        self._cache: dict[str, tuple[Polynomial, ...]] = {}

    def __repr__(self) -> str:
        inner = ", ".join(g.format() for g in self.generators) or "0"
        return f"Ideal({inner})"

    def groebner_basis(self, ordering: TermOrdering,
                       limits: ResourceLimits | None = None) -> tuple[Polynomial, ...]:
        key = json.dumps(ordering.descriptor(), sort_keys=True)
        if key not in self._cache:
            self._cache[key] = buchberger(self.generators, ordering, limits)
        return self._cache[key]

    def normal_form(self, f: Polynomial, ordering: TermOrdering,
                    limits: ResourceLimits | None = None) -> Polynomial:
        gb = self.groebner_basis(ordering, limits)
        if not gb:
            return f
        return divide(f, gb, ordering)[1]

    def contains(self, f: Polynomial, ordering: TermOrdering | None = None,
                 limits: ResourceLimits | None = None) -> bool:
        ordering = ordering or DegRevLex(self.u)
        return self.normal_form(f, ordering, limits).is_zero

    def is_zero(self, ordering: TermOrdering | None = None) -> bool:
        return not self.groebner_basis(ordering or DegRevLex(self.u))

    def is_unit(self, ordering: TermOrdering | None = None) -> bool:
        gb = self.groebner_basis(ordering or DegRevLex(self.u))
        return len(gb) == 1 and gb[0].total_degree() == 0


def normal_form(f: Polynomial, ideal: Ideal, ordering: TermOrdering,
                limits: ResourceLimits | None = None) -> Polynomial:
    return ideal.normal_form(f, ordering, limits)


def ideals_equal(a: Ideal, b: Ideal, ordering: TermOrdering | None = None,
                 limits: ResourceLimits | None = None) -> bool:
    if a.u != b.u:
        raise UniverseMismatchError("ideals over different universes")
    ordering = ordering or DegRevLex(a.u)
    return a.groebner_basis(ordering, limits) == b.groebner_basis(ordering, limits)


# -- monomial ideals and dimension ----------------------------------------------


class MonomialIdeal:
    """Monomial ideal stored by its unique minimal generators."""

    def __init__(self, universe: VariableUniverse, gens: Iterable[Term]):
        self.u = universe
        terms = []
        for t in gens:
            if t.u != universe:
                raise UniverseMismatchError("term over a different universe")
            terms.append(t)
        terms.sort(key=lambda t: (t.total_degree(), t.e))
        minimal: list[Term] = []
        for t in terms:
            if not any(m.divides(t) for m in minimal):
                minimal.append(t)
        self.gens = tuple(minimal)

    def __repr__(self) -> str:
        return f"MonomialIdeal({', '.join(t.format() for t in self.gens) or '0'})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, MonomialIdeal)
                and self.u == other.u and self.gens == other.gens)

    def __hash__(self) -> int:
        return hash((self.u, self.gens))

    @property
    def is_unit(self) -> bool:
        return any(t.is_one for t in self.gens)

    def contains(self, t: Term) -> bool:
        return any(m.divides(t) for m in self.gens)

    def complement_order_ideal(self):
        """The order ideal of monomials outside this ideal, or ``None``
        if it is infinite (i.e. the ideal is not zero-dimensional)."""
        from .orderideals import validate_order_ideal

        if self.is_unit:
            raise PreconditionError("the unit ideal has an empty complement")
        width = len(self.u.names)
        bounds = [None] * width
        for t in self.gens:
            support = [k for k, a in enumerate(t.e) if a]
            if len(support) == 1:
                k = support[0]
                if bounds[k] is None or t.e[k] < bounds[k]:
                    bounds[k] = t.e[k]
        if any(b is None for b in bounds):
            return None
        terms: list[Term] = []
        stack = [(0,) * width]
        seen = {stack[0]}
        while stack:
            e = stack.pop()
            t = Term(self.u, e)
            if self.contains(t):
                continue
            terms.append(t)
            for k in range(width):
                if e[k] + 1 < bounds[k] + 1:
                    e2 = e[:k] + (e[k] + 1,) + e[k + 1:]
                    if e2 not in seen:
                        seen.add(e2)
                        stack.append(e2)
        return validate_order_ideal(terms, self.u)


def leading_term_ideal(ideal: Ideal, ordering: TermOrdering,
                       limits: ResourceLimits | None = None) -> MonomialIdeal:
    gb = ideal.groebner_basis(ordering, limits)
    return MonomialIdeal(ideal.u, [g.leading(ordering)[0] for g in gb])


def _min_hitting_set(supports: list[frozenset[int]]) -> int:
    supports = [s for s in supports
                if not any(t < s for t in supports)]
    supports = list(dict.fromkeys(supports))

    def lower_bound(supps: list[frozenset[int]]) -> int:
        used: set[int] = set()
        count = 0
        for s in sorted(supps, key=len):
            if not (s & used):
                count += 1
                used |= s
        return count

    def solve(supps: list[frozenset[int]], budget: int) -> int:
        if not supps:
            return 0
        if budget <= 0 or lower_bound(supps) > budget:
            return budget + 1  # signals failure within budget
        s = min(supps, key=len)
        best = budget + 1
        for v in sorted(s):
            rest = [t for t in supps if v not in t]
            sub = solve(rest, min(budget, best - 1) - 1)
            if 1 + sub < best:
                best = 1 + sub
        return best

    upper = lower_bound(supports)
    while True:
        result = solve(supports, upper)
        if result <= upper:
            return result
        upper += 1


def krull_dimension(ideal: Ideal, ordering: TermOrdering | None = None,
                    preprocess: str | None = None,
                    limits: ResourceLimits | None = None) -> int:
    """Krull dimension of the quotient ring, via the combinatorial
    dimension of the leading term ideal (maximal independent variable set)."""
    work = ideal
    if preprocess == "linear":
        work, _ = linear_substitution_preprocess(ideal)
    elif preprocess is not None:
        raise ValueError(f"unknown preprocess mode {preprocess!r}")
    ordering = ordering if ordering is not None and ordering.u == work.u \
        else DegRevLex(work.u)
    gb = work.groebner_basis(ordering, limits)
    if any(g.total_degree() == 0 for g in gb):
        raise PreconditionError("the unit ideal has no Krull dimension")
    supports = [frozenset(k for k, a in enumerate(g.leading(ordering)[0].e) if a)
                for g in gb]
    return len(work.u.names) - _min_hitting_set(supports)


# -- elimination ------------------------------------------------------------------


def eliminate(ideal: Ideal, keep: Iterable[str],
              limits: ResourceLimits | None = None) -> Ideal:
    """Generators of the elimination ideal I ∩ K[keep], via a block ordering."""
    keep_set = set(keep)
    unknown = keep_set - set(ideal.u.names)
    if unknown:
        raise UniverseMismatchError(f"unknown variables {sorted(unknown)}")
    elim = [n for n in ideal.u.names if n not in keep_set]
    target = ideal.u.restrict(keep_set)
    if not elim:
        return Ideal(target, [g.convert(target) for g in ideal.generators])
    ordering = Elimination(ideal.u, elim)
    gb = ideal.groebner_basis(ordering, limits)
    kept = [g.convert(target) for g in gb if g.variables() <= keep_set]
    return Ideal(target, kept)


def substitution_eliminate(ideal: Ideal, rules: Mapping[str, Polynomial],
                           verify: bool = False,
                           limits: ResourceLimits | None = None) -> Ideal:
    """Eliminate variables for which a rewriting rule var -> polynomial in
    the kept variables is known to lie in the ideal (caller-asserted, or
    checked when ``verify`` is set)."""
    if not rules:
        return ideal
    eliminated = set(rules)
    for name, rhs in rules.items():
        if name not in ideal.u:
            raise MalformedRulesError(f"unknown variable {name!r}")
        if isinstance(rhs, Polynomial) and rhs.variables() & eliminated:
            raise MalformedRulesError(
                f"rule for {name!r} mentions an eliminated variable")
    if verify:
        ordering = DegRevLex(ideal.u)
        for name, rhs in rules.items():
            member = Polynomial.variable(ideal.u, name) - rhs
            if not ideal.contains(member, ordering, limits):
                raise PreconditionError(
                    f"{name} - ({rhs.format()}) does not lie in the ideal")
    keep = [n for n in ideal.u.names if n not in eliminated]
    target = ideal.u.restrict(keep)
    out = []
    for g in ideal.generators:
        s = g.substitute(dict(rules))
        if not s.is_zero:
            out.append(s.convert(target))
    return Ideal(target, out)


def find_linear_solvable(f: Polynomial) -> tuple[str, Polynomial] | None:
    """If f has shape a*v + g with v absent from g, return (v, -g/a) for
    the first such variable in canonical order."""
    width = len(f.u.names)
    candidates = {}
    for e, c in f.exponent_items():
        if sum(e) == 1:
            idx = next(k for k, a in enumerate(e) if a)
            candidates[idx] = (e, c)
    for idx in sorted(candidates):
        e, c = candidates[idx]
        appears_elsewhere = any(e2[idx] and e2 != e for e2, _ in f.exponent_items())
        if not appears_elsewhere:
            rest = f - Polynomial(f.u, {e: c})
            return f.u.names[idx], rest.scale(Fraction(-1) / c)
    return None


def linear_substitution_preprocess(
        ideal: Ideal) -> tuple[Ideal, list[tuple[str, Polynomial]]]:
    """Repeatedly eliminate variables occurring linearly in a generator and
    nowhere else in it; returns the compressed ideal over the surviving
    variables plus the substitution trail."""
    gens = [g for g in ideal.generators if not g.is_zero]
    trail: list[tuple[str, Polynomial]] = []
    while True:
        found = None
        for k, g in enumerate(gens):
            hit = find_linear_solvable(g)
            if hit:
                found = (k, *hit)
                break
        if not found:
            break
        k, name, rhs = found
        rule = {name: rhs}
        gens = [h.substitute(rule) for i, h in enumerate(gens) if i != k]
        gens = [h for h in gens if not h.is_zero]
        trail = [(v, p.substitute(rule)) for v, p in trail]
        trail.append((name, rhs))
    used = set()
    for g in gens:
        used |= g.variables()
    eliminated = {v for v, _ in trail}
    keep = [n for n in ideal.u.names if n not in eliminated]
    target = ideal.u.restrict(keep)
    out = Ideal(target, [g.convert(target) for g in gens])
    trail_out = [(v, p.convert(target)) for v, p in trail]
    return out, trail_out


# -- serialization -----------------------------------------------------------------


def ideal_to_json(ideal: Ideal, ordering: TermOrdering | None = None) -> dict:
    doc = {
        "variables": list(ideal.u.names),
        "generators": [g.to_json() for g in ideal.generators],
    }
    if ordering is not None:
        doc["ordering"] = ordering.descriptor()
    return doc


def gb_to_json(gb: Sequence[Polynomial], ordering: TermOrdering) -> dict:
    universe = ordering.u
    return {
        "variables": list(universe.names),
        "ordering": ordering.descriptor(),
        "reduced": True,
        "generators": [g.to_json() for g in gb],
    }


def ideal_from_json(doc: Mapping, universe: VariableUniverse | None = None
                    ) -> tuple[Ideal, TermOrdering | None]:
    if universe is None:
        names = list(doc["variables"])
        kinds = ["c" if n.startswith("c[") else ("t" if n == "t" else "x")
                 for n in names]
        positions = {}
        for n, k in zip(names, kinds):
            if k == "c":
                i, j = n[2:-1].split(",")
                positions[n] = (int(i), int(j))
        universe = VariableUniverse(names, kinds, positions)
    gens = [Polynomial.from_json(g, universe) for g in doc.get("generators", [])]
    ordering = None
    if "ordering" in doc:
        desc = doc["ordering"]
        ordering = ordering_from_name(universe, desc["kind"],
                                      desc.get("precedence"))
    return Ideal(universe, gens), ordering
