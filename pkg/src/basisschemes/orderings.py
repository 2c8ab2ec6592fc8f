"""Term orderings.

Every ordering is bound to a universe and exposes a sort key on dense
exponent tuples; bigger key means bigger term.  All orderings here are
total, multiplicative, and have 1 as the minimal term (for the weighted
ones this is forced by strictly positive weights).
"""

from __future__ import annotations

import enum
from typing import Mapping, Sequence

from .errors import OrderingDomainError
from .universe import Term, VariableUniverse


class Comparison(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class TermOrdering:
    """Base class; subclasses set ``kind`` and implement ``tuple_key``."""

    kind = "abstract"

    def __init__(self, universe: VariableUniverse):
        self.u = universe

    def tuple_key(self, e: tuple[int, ...]):
        raise NotImplementedError

    def key(self, term: Term):
        if term.u != self.u:
            raise OrderingDomainError(
                f"term {term} is not over this ordering's universe")
        return self.tuple_key(term.e)

    def compare(self, t: Term, u: Term) -> Comparison:
        kt, ku = self.key(t), self.key(u)
        if kt < ku:
            return Comparison.LESS
        if kt > ku:
            return Comparison.GREATER
        return Comparison.EQUAL

    def greater(self, t: Term, u: Term) -> bool:
        return self.compare(t, u) is Comparison.GREATER

    def sort_terms(self, terms, reverse: bool = False):
        return sorted(terms, key=self.key, reverse=reverse)

    def descriptor(self):
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"{type(self).__name__}({', '.join(self.u.names)})"


def _resolve_precedence(universe: VariableUniverse,
                        precedence: Sequence[str] | None) -> tuple[int, ...]:
    if precedence is None:
        return tuple(range(len(universe.names)))
    if set(precedence) != set(universe.names):
        raise OrderingDomainError(
            "precedence list must mention every universe variable exactly once")
    return tuple(universe.index_of(n) for n in precedence)


class Lex(TermOrdering):
    kind = "lex"

    def __init__(self, universe, precedence: Sequence[str] | None = None):
        super().__init__(universe)
        self._perm = _resolve_precedence(universe, precedence)

    def tuple_key(self, e):
        return tuple(e[i] for i in self._perm)

    def descriptor(self):
        return {"kind": self.kind, "precedence": [self.u.names[i] for i in self._perm]}


class DegLex(TermOrdering):
    kind = "deglex"

    def __init__(self, universe, precedence: Sequence[str] | None = None):
        super().__init__(universe)
        self._perm = _resolve_precedence(universe, precedence)

    def tuple_key(self, e):
        return (sum(e), tuple(e[i] for i in self._perm))

    def descriptor(self):
        return {"kind": self.kind, "precedence": [self.u.names[i] for i in self._perm]}


class DegRevLex(TermOrdering):
    """Higher total degree wins; ties go to the last variable (in
    precedence order) with a nonzero exponent difference, smaller
    exponent winning."""

    kind = "degrevlex"

    def __init__(self, universe, precedence: Sequence[str] | None = None):
        super().__init__(universe)
        self._perm = _resolve_precedence(universe, precedence)
        self._rev = tuple(reversed(self._perm))

    def tuple_key(self, e):
        return (sum(e), tuple(-e[i] for i in self._rev))

    def descriptor(self):
        return {"kind": self.kind, "precedence": [self.u.names[i] for i in self._perm]}


class WeightedDeg(TermOrdering):
    """Weighted total degree first, then an arbitrary tiebreak ordering."""

    kind = "weighted"

    def __init__(self, universe, weights: Mapping[str, int],
                 tiebreak: TermOrdering | None = None):
        super().__init__(universe)
        missing = [n for n in universe.names if n not in weights]
        if missing:
            raise OrderingDomainError(f"weights missing for {missing}")
        if any(weights[n] <= 0 for n in universe.names):
            raise OrderingDomainError("weights must be strictly positive")
        self._w = tuple(weights[n] for n in universe.names)
        self.tiebreak = tiebreak if tiebreak is not None else DegRevLex(universe)
        if self.tiebreak.u != universe:
            raise OrderingDomainError("tiebreak ordering universe mismatch")

    def tuple_key(self, e):
        return (sum(w * a for w, a in zip(self._w, e)), self.tiebreak.tuple_key(e))

    def descriptor(self):
        return {"kind": self.kind,
                "weights": {n: w for n, w in zip(self.u.names, self._w)},
                "tiebreak": self.tiebreak.descriptor()}


class Elimination(TermOrdering):
    """Block ordering: compare on the eliminated block first, so the
    kept block's variables are as small as possible."""

    kind = "elimination"

    def __init__(self, universe, eliminate: Sequence[str],
                 block_order: TermOrdering | None = None,
                 rest_order: TermOrdering | None = None):
        super().__init__(universe)
        elim = set(eliminate)
        unknown = elim - set(universe.names)
        if unknown:
            raise OrderingDomainError(f"unknown variables to eliminate: {sorted(unknown)}")
        self._elim_idx = tuple(k for k, n in enumerate(universe.names) if n in elim)
        self._keep_idx = tuple(k for k, n in enumerate(universe.names) if n not in elim)
        self._elim_u = universe.restrict([universe.names[k] for k in self._elim_idx])
        self._keep_u = universe.restrict([universe.names[k] for k in self._keep_idx])
        self.block_order = block_order if block_order is not None else DegRevLex(self._elim_u)
        self.rest_order = rest_order if rest_order is not None else DegRevLex(self._keep_u)
        if self.block_order.u != self._elim_u or self.rest_order.u != self._keep_u:
            raise OrderingDomainError("sub-ordering universes must match the blocks")

    def tuple_key(self, e):
        return (self.block_order.tuple_key(tuple(e[i] for i in self._elim_idx)),
                self.rest_order.tuple_key(tuple(e[i] for i in self._keep_idx)))

    def descriptor(self):
        return {"kind": self.kind,
                "eliminate": [self.u.names[i] for i in self._elim_idx],
                "block": self.block_order.descriptor(),
                "rest": self.rest_order.descriptor()}


class SigmaBar(TermOrdering):
    """Weighted-degree-compatible product ordering on a mixed x/c universe.

    Terms are compared by their joint (V, W)-degree; among equal-degree
    terms, differing x-parts are compared by the given x-ordering, and
    equal x-parts fall through to a tiebreak on the c-part (DegRevLex in
    the universe's column-major c order, unless overridden).
    """

    kind = "sigmabar"

    def __init__(self, universe, v_weights: Mapping[str, int],
                 w_weights: Mapping[str, int], sigma_x: TermOrdering,
                 c_tiebreak: TermOrdering | None = None):
        super().__init__(universe)
        if universe.t_name is not None:
            raise OrderingDomainError("sigma-bar does not cover a deformation parameter")
        self._x_idx = universe.indices_of_kind("x")
        self._c_idx = universe.indices_of_kind("c")
        x_names = [universe.names[i] for i in self._x_idx]
        c_names = [universe.names[i] for i in self._c_idx]
        missing = [n for n in x_names if n not in v_weights]
        missing += [n for n in c_names if n not in w_weights]
        if missing:
            raise OrderingDomainError(f"weights missing for {missing}")
        self._w = tuple(
            (v_weights[n] if k == "x" else w_weights[n])
            for n, k in zip(universe.names, universe.kinds)
        )
        if any(w <= 0 for w in self._w):
            raise OrderingDomainError("weights must be strictly positive")
        self._x_u = universe.restrict(x_names)
        self.sigma_x = sigma_x
        if sigma_x.u != self._x_u:
            raise OrderingDomainError("sigma_x must be an ordering on the x-block")
        self._c_u = universe.restrict(c_names)
        self.c_tiebreak = c_tiebreak if c_tiebreak is not None else DegRevLex(self._c_u)
        if self.c_tiebreak.u != self._c_u:
            raise OrderingDomainError("c tiebreak must be an ordering on the c-block")

    def tuple_key(self, e):
        return (sum(w * a for w, a in zip(self._w, e)),
                self.sigma_x.tuple_key(tuple(e[i] for i in self._x_idx)),
                self.c_tiebreak.tuple_key(tuple(e[i] for i in self._c_idx)))

    def descriptor(self):
        return {"kind": self.kind,
                "weights": {n: w for n, w in zip(self.u.names, self._w)},
                "sigma_x": self.sigma_x.descriptor(),
                "c_tiebreak": self.c_tiebreak.descriptor()}


_BY_NAME = {"lex": Lex, "deglex": DegLex, "degrevlex": DegRevLex}


def ordering_from_name(universe: VariableUniverse, name: str,
                       precedence: Sequence[str] | None = None) -> TermOrdering:
    try:
        cls = _BY_NAME[name.lower()]
    except KeyError:
        raise OrderingDomainError(
            f"unknown ordering {name!r}; expected one of {sorted(_BY_NAME)}") from None
    return cls(universe, precedence)
