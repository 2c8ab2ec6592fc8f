"""Variable universes and terms.

A universe fixes the ambient polynomial ring: an ordered x-block, an
ordered block of grid variables c[i,j] (column-major, i.e. sorted by
(j, i)), and optionally a single deformation parameter t.  Terms store a
dense exponent tuple aligned with the universe's variable list; the
sparse {variable: exponent} view is available for serialization.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import ParseError, UniverseMismatchError

X_KIND = "x"
C_KIND = "c"
T_KIND = "t"

DEFAULT_T_NAME = "t"


def c_name(i: int, j: int) -> str:
    return f"c[{i},{j}]"


class VariableUniverse:
    """Ordered list of distinct variables with block structure."""

    __slots__ = ("names", "kinds", "positions", "_index", "_hash")

    def __init__(self, names: Iterable[str], kinds: Iterable[str],
                 positions: Mapping[str, tuple[int, int]] | None = None):
        self.names = tuple(names)
        self.kinds = tuple(kinds)
        self.positions = dict(positions or {})
        if len(self.names) != len(self.kinds):
            raise ValueError("names and kinds must have equal length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("universe variables must be distinct")
        if self.kinds.count(T_KIND) > 1:
            raise ValueError("at most one deformation parameter allowed")
        for name, kind in zip(self.names, self.kinds):
            if kind == C_KIND and name not in self.positions:
                raise ValueError(f"grid variable {name} lacks a position")
            if kind not in (X_KIND, C_KIND, T_KIND):
                raise ValueError(f"unknown variable kind {kind!r}")
        self._index = {n: k for k, n in enumerate(self.names)}
        self._hash = hash((self.names, self.kinds))

    # -- construction -----------------------------------------------------

    @classmethod
    def for_x(cls, x_names: Iterable[str]) -> "VariableUniverse":
        names = tuple(x_names)
        return cls(names, (X_KIND,) * len(names))

    @classmethod
    def build(cls, x_names: Iterable[str] = (), grid: Iterable[tuple[int, int]] = (),
              include_t: bool = False) -> "VariableUniverse":
        """Universe with x-block, then c-block in (j, i) order, then t."""
        xs = tuple(x_names)
        cs = sorted(set(grid), key=lambda ij: (ij[1], ij[0]))
        names = list(xs) + [c_name(i, j) for (i, j) in cs]
        kinds = [X_KIND] * len(xs) + [C_KIND] * len(cs)
        positions = {c_name(i, j): (i, j) for (i, j) in cs}
        if include_t:
            names.append(DEFAULT_T_NAME)
            kinds.append(T_KIND)
        return cls(names, kinds, positions)

    # -- introspection ----------------------------------------------------

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other) -> bool:
        return (isinstance(other, VariableUniverse)
                and self.names == other.names and self.kinds == other.kinds)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"VariableUniverse({', '.join(self.names)})"

    @property
    def x_names(self) -> tuple[str, ...]:
        return tuple(n for n, k in zip(self.names, self.kinds) if k == X_KIND)

    @property
    def c_names(self) -> tuple[str, ...]:
        return tuple(n for n, k in zip(self.names, self.kinds) if k == C_KIND)

    @property
    def t_name(self) -> str | None:
        for n, k in zip(self.names, self.kinds):
            if k == T_KIND:
                return n
        return None

    def grid_positions(self) -> tuple[tuple[int, int], ...]:
        return tuple(self.positions[n] for n in self.c_names)

    def index_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UniverseMismatchError(f"unknown variable {name!r} in {self!r}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def indices_of_kind(self, kind: str) -> tuple[int, ...]:
        return tuple(k for k, kk in enumerate(self.kinds) if kk == kind)

    # -- term construction -------------------------------------------------

    def one(self) -> "Term":
        return Term(self, (0,) * len(self.names))

    def term(self, exps: Mapping[str, int]) -> "Term":
        e = [0] * len(self.names)
        for name, a in exps.items():
            if a < 0:
                raise ValueError(f"negative exponent for {name}")
            if a:
                e[self.index_of(name)] = a
        return Term(self, tuple(e))

    def variable_term(self, name: str) -> "Term":
        return self.term({name: 1})

    def term_from_tuple(self, e: tuple[int, ...]) -> "Term":
        if len(e) != len(self.names):
            raise UniverseMismatchError("exponent tuple length mismatch")
        return Term(self, tuple(e))

    # -- relating universes -------------------------------------------------

    def projection_to(self, other: "VariableUniverse") -> tuple[int | None, ...]:
        """For each variable of self, its index in other (None if absent)."""
        return tuple(other._index.get(n) for n in self.names)

    def restrict(self, names: Iterable[str]) -> "VariableUniverse":
        keep = set(names)
        sel = [k for k, n in enumerate(self.names) if n in keep]
        return VariableUniverse(
            tuple(self.names[k] for k in sel),
            tuple(self.kinds[k] for k in sel),
            {self.names[k]: self.positions[self.names[k]]
             for k in sel if self.kinds[k] == C_KIND},
        )


class Term:
    """A monomial: dense exponent tuple over a fixed universe."""

    __slots__ = ("u", "e", "_hash")

    def __init__(self, universe: VariableUniverse, e: tuple[int, ...]):
        self.u = universe
        self.e = e
        self._hash = hash((universe._hash, e))

    def __eq__(self, other) -> bool:
        return isinstance(other, Term) and self.e == other.e and self.u == other.u

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return self.format()

    # -- views --------------------------------------------------------------

    def exponents(self) -> dict[str, int]:
        """Sparse {variable: exponent} map; zero exponents omitted."""
        return {n: a for n, a in zip(self.u.names, self.e) if a}

    def total_degree(self) -> int:
        return sum(self.e)

    def weighted_degree(self, weights: Mapping[str, int]) -> int:
        total = 0
        for n, a in zip(self.u.names, self.e):
            if a:
                try:
                    total += weights[n] * a
                except KeyError:
                    raise UniverseMismatchError(
                        f"no weight for variable {n!r}") from None
        return total

    @property
    def is_one(self) -> bool:
        return not any(self.e)

    def variables(self) -> tuple[str, ...]:
        return tuple(n for n, a in zip(self.u.names, self.e) if a)

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other: "Term") -> None:
        if self.u != other.u:
            raise UniverseMismatchError("terms over different universes")

    def mul(self, other: "Term") -> "Term":
        self._check(other)
        return Term(self.u, tuple(a + b for a, b in zip(self.e, other.e)))

    def divides(self, other: "Term") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.e, other.e))

    def div(self, other: "Term") -> "Term":
        self._check(other)
        e = tuple(a - b for a, b in zip(self.e, other.e))
        if any(a < 0 for a in e):
            raise ValueError(f"{other} does not divide {self}")
        return Term(self.u, e)

    def lcm(self, other: "Term") -> "Term":
        self._check(other)
        return Term(self.u, tuple(max(a, b) for a, b in zip(self.e, other.e)))

    def convert(self, target: VariableUniverse) -> "Term":
        e = [0] * len(target.names)
        for n, a in zip(self.u.names, self.e):
            if a:
                e[target.index_of(n)] = a
        return Term(target, tuple(e))

    # -- formatting ------------------------------------------------------------

    def format(self) -> str:
        parts = []
        for n, a in zip(self.u.names, self.e):
            if a == 1:
                parts.append(n)
            elif a > 1:
                parts.append(f"{n}^{a}")
        return "*".join(parts) if parts else "1"


def parse_monomial(text: str, universe: VariableUniverse) -> Term:
    """Parse a power product like ``x^2*y`` or ``c[1,2]`` or ``1``."""
    exps: dict[str, int] = {}
    for factor in _split_factors(text):
        if factor == "1":
            continue
        name, _, pow_txt = factor.partition("^")
        name = name.strip()
        if name not in universe:
            raise ParseError(f"unknown variable {name!r} in monomial {text!r}")
        if pow_txt:
            try:
                a = int(pow_txt)
            except ValueError:
                raise ParseError(f"bad exponent in {factor!r}") from None
            if a < 0:
                raise ParseError(f"negative exponent in {factor!r}")
        else:
            a = 1
        exps[name] = exps.get(name, 0) + a
    return universe.term(exps)


def _split_factors(text: str) -> list[str]:
    text = text.strip()
    if not text:
        raise ParseError("empty monomial")
    factors, depth, current = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "*" and depth == 0:
            factors.append("".join(current).strip())
            current = []
        elif not ch.isspace() or depth > 0:
            current.append(ch)
    factors.append("".join(current).strip())
    if any(not f for f in factors) or depth != 0:
        raise ParseError(f"malformed monomial {text!r}")
    return factors
