"""The border basis scheme: generic prebasis, formal multiplication
matrices, the commutator-defined ideal, and point-level checks."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import ParseError, PreconditionError
from .groebner import Ideal, ResourceLimits, leading_term_ideal
from .orderings import DegRevLex
from .orderideals import OrderIdealData
from .poly import Polynomial, divide
from .universe import Term, VariableUniverse, c_name


def full_grid(odata: OrderIdealData) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for j in range(1, odata.nu + 1)
                 for i in range(1, odata.mu + 1))


def prebasis_universe(odata: OrderIdealData, include_x: bool = True,
                      include_t: bool = False) -> VariableUniverse:
    return VariableUniverse.build(
        odata.u.names if include_x else (), full_grid(odata), include_t)


def coefficient_universe(odata: OrderIdealData) -> VariableUniverse:
    return prebasis_universe(odata, include_x=False)


def generic_prebasis(odata: OrderIdealData,
                     universe: VariableUniverse | None = None) -> tuple[Polynomial, ...]:
    """The polynomials g_j = b_j - sum_i c[i,j]*t_i, one per border term."""
    u = universe or prebasis_universe(odata)
    out = []
    for j, b in enumerate(odata.border, start=1):
        d = {b.convert(u).e: Fraction(1)}
        for i, t in enumerate(odata.terms, start=1):
            e = t.convert(u).mul(u.variable_term(c_name(i, j))).e
            d[e] = Fraction(-1)
        out.append(Polynomial(u, d))
    return tuple(out)


class GenericMatrix:
    """A mu x mu matrix of polynomials in the grid variables."""

    __slots__ = ("u", "entries")

    def __init__(self, universe: VariableUniverse,
                 entries: Iterable[Iterable[Polynomial]]):
        self.u = universe
        self.entries = tuple(tuple(row) for row in entries)

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, rc: tuple[int, int]) -> Polynomial:
        r, c = rc
        return self.entries[r][c]

    def mul(self, other: "GenericMatrix") -> "GenericMatrix":
        n = self.size
        rows = []
        for r in range(n):
            row = []
            for c in range(n):
                acc = Polynomial.zero(self.u)
                for k in range(n):
                    acc = acc + self.entries[r][k] * other.entries[k][c]
                row.append(acc)
            rows.append(row)
        return GenericMatrix(self.u, rows)

    def sub(self, other: "GenericMatrix") -> "GenericMatrix":
        return GenericMatrix(self.u, [
            [a - b for a, b in zip(ra, rb)]
            for ra, rb in zip(self.entries, other.entries)])

    def __repr__(self) -> str:
        rows = ["[" + ", ".join(e.format() for e in row) + "]"
                for row in self.entries]
        return "GenericMatrix(" + "; ".join(rows) + ")"


def multiplication_matrix(odata: OrderIdealData, k: int,
                          universe: VariableUniverse | None = None) -> GenericMatrix:
    """Formal multiplication by the k-th variable (1-based) on the span
    of O, rewriting border products through the generic prebasis."""
    if not 1 <= k <= len(odata.u.names):
        raise PreconditionError(f"axis index {k} out of range")
    u = universe or coefficient_universe(odata)
    mu = odata.mu
    zero, one = Polynomial.zero(u), Polynomial.constant(u, 1)
    interior = {t.e: i for i, t in enumerate(odata.terms, start=1)}
    border = {b.e: j for j, b in enumerate(odata.border, start=1)}
    columns = []
    xk = odata.u.variable_term(odata.u.names[k - 1])
    for t in odata.terms:
        prod = t.mul(xk)
        if prod.e in interior:
            i2 = interior[prod.e]
            columns.append([one if r == i2 else zero for r in range(1, mu + 1)])
        else:
            j = border[prod.e]
            columns.append([Polynomial.variable(u, c_name(r, j))
                            for r in range(1, mu + 1)])
    return GenericMatrix(u, [[columns[c][r] for c in range(mu)]
                             for r in range(mu)])


def border_scheme_ideal(odata: OrderIdealData,
                        universe: VariableUniverse | None = None) -> Ideal:
    """Defining ideal: all entries of the pairwise commutators of the
    generic multiplication matrices (zeros and exact duplicates dropped,
    no interreduction)."""
    u = universe or coefficient_universe(odata)
    n = len(odata.u.names)
    gens: list[Polynomial] = []
    seen = set()
    mats = [multiplication_matrix(odata, k, u) for k in range(1, n + 1)]
    for k in range(n):
        for l in range(k + 1, n):
            comm = mats[k].mul(mats[l]).sub(mats[l].mul(mats[k]))
            for row in comm.entries:
                for entry in row:
                    if not entry.is_zero and entry not in seen:
                        seen.add(entry)
                        gens.append(entry)
    return Ideal(u, gens)


class SchemePoint:
    """Rational coordinates on the c-grid; absent positions mean zero."""

    __slots__ = ("values",)

    def __init__(self, values: Mapping[tuple[int, int], Fraction | int] | None = None):
        self.values = {ij: Fraction(v) for ij, v in (values or {}).items()
                       if Fraction(v) != 0}

    def value(self, i: int, j: int) -> Fraction:
        return self.values.get((i, j), Fraction(0))

    def restrict(self, positions: Iterable[tuple[int, int]]) -> "SchemePoint":
        keep = set(positions)
        return SchemePoint({ij: v for ij, v in self.values.items() if ij in keep})

    def __eq__(self, other) -> bool:
        return isinstance(other, SchemePoint) and self.values == other.values

    def __hash__(self) -> int:
        return hash(frozenset(self.values.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"c[{i},{j}]={v}" for (i, j), v in sorted(self.values.items()))
        return f"SchemePoint({inner})"

    def to_json(self) -> dict:
        return {"c": {f"{i},{j}": str(v)
                      for (i, j), v in sorted(self.values.items())}}

    @classmethod
    def from_json(cls, doc: Mapping) -> "SchemePoint":
        try:
            raw = doc["c"]
            values = {}
            for key, v in raw.items():
                i, j = key.split(",")
                values[(int(i), int(j))] = Fraction(v)
        except (KeyError, ValueError, TypeError) as exc:
            raise ParseError(f"bad scheme point JSON: {exc}") from None
        return cls(values)


def evaluate_multiplication_matrix(odata: OrderIdealData, k: int,
                                   point: SchemePoint) -> list[list[Fraction]]:
    mu = odata.mu
    interior = {t.e: i for i, t in enumerate(odata.terms, start=1)}
    border = {b.e: j for j, b in enumerate(odata.border, start=1)}
    xk = odata.u.variable_term(odata.u.names[k - 1])
    cols = []
    for t in odata.terms:
        prod = t.mul(xk)
        if prod.e in interior:
            i2 = interior[prod.e]
            cols.append([Fraction(1) if r == i2 else Fraction(0)
                         for r in range(1, mu + 1)])
        else:
            j = border[prod.e]
            cols.append([point.value(r, j) for r in range(1, mu + 1)])
    return [[cols[c][r] for c in range(mu)] for r in range(mu)]


def _mat_mul(a, b):
    n = len(a)
    return [[sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n)]
            for r in range(n)]


def first_violated_commutator(odata: OrderIdealData, point: SchemePoint
                              ) -> tuple[int, int, int, int, Fraction] | None:
    """First nonvanishing commutator entry (k, l, row, col, value), or None."""
    n = len(odata.u.names)
    mats = [evaluate_multiplication_matrix(odata, k, point)
            for k in range(1, n + 1)]
    for k in range(n):
        for l in range(k + 1, n):
            kl = _mat_mul(mats[k], mats[l])
            lk = _mat_mul(mats[l], mats[k])
            for r in range(odata.mu):
                for c in range(odata.mu):
                    if kl[r][c] != lk[r][c]:
                        return (k + 1, l + 1, r + 1, c + 1, kl[r][c] - lk[r][c])
    return None


def is_border_basis_point(odata: OrderIdealData, point: SchemePoint) -> bool:
    """True iff the specialized multiplication matrices pairwise commute."""
    return first_violated_commutator(odata, point) is None


def specialize_prebasis(odata: OrderIdealData,
                        point: SchemePoint) -> tuple[Polynomial, ...]:
    """The candidate border basis b_j - sum_i a[i,j]*t_i over K[x]."""
    u = odata.u
    out = []
    for j, b in enumerate(odata.border, start=1):
        d = {b.e: Fraction(1)}
        for i, t in enumerate(odata.terms, start=1):
            a = point.value(i, j)
            if a:
                d[t.e] = d.get(t.e, Fraction(0)) - a
        out.append(Polynomial(u, d))
    return tuple(out)


def _rational_rank(rows: list[list[Fraction]]) -> int:
    m = [row[:] for row in rows]
    rank, cols = 0, len(m[0]) if m else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = Fraction(1) / m[rank][c]
        m[rank] = [v * inv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                factor = m[r][c]
                m[r] = [v - factor * w for v, w in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def oracle_is_border_basis(odata: OrderIdealData, point: SchemePoint,
                           limits: ResourceLimits | None = None
                           ) -> tuple[bool, str]:
    """Ground-truth check of the direct sum P = I + <O> via a Groebner
    basis of the specialized ideal.  Returns (verdict, diagnostic)."""
    u = odata.u
    ideal = Ideal(u, specialize_prebasis(odata, point))
    ordering = DegRevLex(u)
    lt = leading_term_ideal(ideal, ordering, limits)
    if lt.is_unit:
        return False, "specialized ideal is the unit ideal"
    complement = lt.complement_order_ideal()
    if complement is None:
        return False, "specialized ideal is not zero-dimensional"
    if complement.mu != odata.mu:
        return False, (f"quotient has vector space dimension {complement.mu}, "
                       f"expected {odata.mu}")
    gb = ideal.groebner_basis(ordering, limits)
    basis_index = {t.e: k for k, t in enumerate(complement.terms)}
    rows = []
    for t in odata.terms:
        nf = divide(Polynomial.from_term(t), gb, ordering)[1]
        row = [Fraction(0)] * odata.mu
        for e, c in nf.exponent_items():
            row[basis_index[e]] = c
        rows.append(row)
    if _rational_rank(rows) != odata.mu:
        return False, "residue classes of O are linearly dependent modulo the ideal"
    return True, "O is a vector space basis of the quotient"
