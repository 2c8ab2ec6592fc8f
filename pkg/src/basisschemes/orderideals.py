"""Order ideal combinatorics: validation, border, corners, indexing.

Indexing convention: the interior terms t_1..t_mu and each border block
are sorted by total degree ascending, ties by descending lexicographic
exponent tuple (so {1, x, y, xy} for the standard square).  The border
is labeled corners-first: b_1..b_eta are the corners.
"""

from __future__ import annotations

from typing import Iterable

from .errors import DivisorClosureError, ParseError, PreconditionError
from .universe import Term, VariableUniverse, parse_monomial


def canonical_term_key(t: Term):
    """Sort key: degree ascending, then lexicographically largest first."""
    return (t.total_degree(), tuple(-a for a in t.e))


class OrderIdealData:
    """A validated order ideal with its border and corner indexing."""

    __slots__ = ("u", "terms", "border", "eta")

    def __init__(self, universe: VariableUniverse, terms: tuple[Term, ...],
                 border: tuple[Term, ...], eta: int):
        self.u = universe
        self.terms = terms
        self.border = border
        self.eta = eta

    @property
    def mu(self) -> int:
        return len(self.terms)

    @property
    def nu(self) -> int:
        return len(self.border)

    @property
    def corners(self) -> tuple[Term, ...]:
        return self.border[:self.eta]

    def term_index(self, t: Term) -> int:
        """1-based position of t in O."""
        return self.terms.index(t) + 1

    def border_index(self, b: Term) -> int:
        """1-based position of b in the border."""
        return self.border.index(b) + 1

    def __repr__(self) -> str:
        return f"OrderIdeal({', '.join(t.format() for t in self.terms)})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, OrderIdealData) and self.u == other.u
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.u, self.terms))

    def to_json(self) -> dict:
        return {
            "variables": list(self.u.names),
            "terms": [t.exponents() for t in self.terms],
            "border": [b.exponents() for b in self.border],
            "corners": [b.exponents() for b in self.corners],
            "mu": self.mu, "nu": self.nu, "eta": self.eta,
        }


def validate_order_ideal(terms: Iterable[Term | str],
                         universe: VariableUniverse) -> OrderIdealData:
    """Check divisor closure and build the full indexing data."""
    seen: dict[tuple, Term] = {}
    for t in terms:
        if isinstance(t, str):
            t = parse_monomial(t, universe)
        elif t.u != universe:
            t = t.convert(universe)
        seen[t.e] = t
    if not seen:
        raise PreconditionError("an order ideal must be nonempty")
    for t in list(seen.values()):
        for k, a in enumerate(t.e):
            if a:
                d = t.e[:k] + (a - 1,) + t.e[k + 1:]
                if d not in seen:
                    missing = Term(universe, d)
                    raise DivisorClosureError(t.format(), missing.format())
    ordered = tuple(sorted(seen.values(), key=canonical_term_key))
    border_terms = border_of(ordered, universe)
    corner_set = {b.e for b in corners_of(ordered, universe)}
    first = [b for b in border_terms if b.e in corner_set]
    rest = [b for b in border_terms if b.e not in corner_set]
    return OrderIdealData(universe, ordered, tuple(first + rest), len(first))


def border_of(terms: Iterable[Term], universe: VariableUniverse) -> tuple[Term, ...]:
    """The border: (x_1 O ∪ ... ∪ x_n O) minus O, canonically sorted."""
    interior = {t.e for t in terms}
    out: dict[tuple, Term] = {}
    for t in terms:
        for k in range(len(universe.names)):
            e = t.e[:k] + (t.e[k] + 1,) + t.e[k + 1:]
            if e not in interior:
                out[e] = Term(universe, e)
    return tuple(sorted(out.values(), key=canonical_term_key))


def corners_of(terms: Iterable[Term], universe: VariableUniverse) -> tuple[Term, ...]:
    """Minimal generators of the complement monoideal: the border terms
    all of whose immediate divisors lie in O."""
    interior = {t.e for t in terms}
    out = []
    for b in border_of(terms, universe):
        ok = True
        for k, a in enumerate(b.e):
            if a:
                d = b.e[:k] + (a - 1,) + b.e[k + 1:]
                if d not in interior:
                    ok = False
                    break
        if ok:
            out.append(b)
    return tuple(out)


def order_ideal_from_strings(text: str, universe: VariableUniverse) -> OrderIdealData:
    """Parse a comma-separated monomial list like ``1, x, y, x*y``."""
    parts = [p.strip() for p in text.split(",")]
    if any(not p for p in parts):
        raise ParseError(f"malformed order ideal list {text!r}")
    return validate_order_ideal(parts, universe)


def segment_order_ideal(universe: VariableUniverse, mu: int) -> OrderIdealData:
    """The segment {1, x_n, x_n^2, ..., x_n^(mu-1)} in the last variable."""
    if mu < 1:
        raise PreconditionError("a segment needs at least one term")
    last = universe.names[-1]
    return validate_order_ideal(
        [universe.term({last: k}) for k in range(mu)], universe)
