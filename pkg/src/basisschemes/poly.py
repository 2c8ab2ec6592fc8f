"""Sparse multivariate polynomials over exact rationals.

Coefficients are ``fractions.Fraction`` throughout; no floating point
anywhere.  A polynomial is an immutable map from exponent tuples to
nonzero coefficients over a fixed universe.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import OrderingDomainError, ParseError, UniverseMismatchError
from .orderings import TermOrdering
from .universe import Term, VariableUniverse

Scalar = Fraction | int


class Polynomial:
    """Immutable sparse polynomial over a :class:`VariableUniverse`."""

    __slots__ = ("u", "_d", "_hash")

    def __init__(self, universe: VariableUniverse,
                 coeffs: Mapping[tuple[int, ...], Scalar]):
        self.u = universe
        d = {}
        for e, c in coeffs.items():
            c = Fraction(c)
            if c:
                if len(e) != len(universe.names):
                    raise UniverseMismatchError("exponent tuple length mismatch")
                d[e] = c
        self._d = d
        self._hash = None

    # -- construction ------------------------------------------------------

    @classmethod
    def zero(cls, universe: VariableUniverse) -> "Polynomial":
        return cls(universe, {})

    @classmethod
    def constant(cls, universe: VariableUniverse, value: Scalar) -> "Polynomial":
        return cls(universe, {(0,) * len(universe.names): Fraction(value)})

    @classmethod
    def variable(cls, universe: VariableUniverse, name: str) -> "Polynomial":
        return cls.from_term(universe.variable_term(name))

    @classmethod
    def from_term(cls, term: Term, coeff: Scalar = 1) -> "Polynomial":
        return cls(term.u, {term.e: Fraction(coeff)})

    @classmethod
    def from_terms(cls, universe: VariableUniverse,
                   pairs: Iterable[tuple[Term, Scalar]]) -> "Polynomial":
        d: dict[tuple[int, ...], Fraction] = {}
        for t, c in pairs:
            if t.u != universe:
                raise UniverseMismatchError("term over a different universe")
            d[t.e] = d.get(t.e, Fraction(0)) + Fraction(c)
        return cls(universe, d)

    # -- basic queries -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._d

    def __len__(self) -> int:
        return len(self._d)

    def __bool__(self) -> bool:
        return bool(self._d)

    def terms(self) -> list[tuple[Term, Fraction]]:
        return [(Term(self.u, e), c) for e, c in self._d.items()]

    def exponent_items(self) -> Iterable[tuple[tuple[int, ...], Fraction]]:
        return self._d.items()

    def coefficient(self, term: Term) -> Fraction:
        if term.u != self.u:
            raise UniverseMismatchError("term over a different universe")
        return self._d.get(term.e, Fraction(0))

    def variables(self) -> set[str]:
        out: set[str] = set()
        for e in self._d:
            out.update(n for n, a in zip(self.u.names, e) if a)
        return out

    def total_degree(self) -> int:
        return max((sum(e) for e in self._d), default=0)

    def constant_term(self) -> Fraction:
        return self._d.get((0,) * len(self.u.names), Fraction(0))

    def leading(self, ordering: TermOrdering) -> tuple[Term, Fraction]:
        if not self._d:
            raise ValueError("the zero polynomial has no leading term")
        if ordering.u != self.u:
            raise OrderingDomainError("ordering universe mismatch")
        e = max(self._d, key=ordering.tuple_key)
        return Term(self.u, e), self._d[e]

    def monic(self, ordering: TermOrdering) -> "Polynomial":
        if not self._d:
            return self
        _, c = self.leading(ordering)
        return self.scale(Fraction(1) / c)

    # -- equality / hashing -----------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.u == other.u and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.u, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.u, frozenset(self._d.items())))
        return self._hash

    # -- arithmetic ----------------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.u != self.u:
                raise UniverseMismatchError("polynomials over different universes")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.u, other)
        raise TypeError(f"cannot combine polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        d = dict(self._d)
        for e, c in other._d.items():
            d[e] = d.get(e, Fraction(0)) + c
        return Polynomial(self.u, d)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.u, {e: -c for e, c in self._d.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        d: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._d.items():
            for e2, c2 in other._d.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                d[e] = d.get(e, Fraction(0)) + c1 * c2
        return Polynomial(self.u, d)

    __rmul__ = __mul__

    def scale(self, scalar: Scalar) -> "Polynomial":
        s = Fraction(scalar)
        return Polynomial(self.u, {e: c * s for e, c in self._d.items()})

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial.constant(self.u, 1)
        for _ in range(n):
            out = out * self
        return out

    def mul_term(self, term: Term, coeff: Scalar = 1) -> "Polynomial":
        if term.u != self.u:
            raise UniverseMismatchError("term over a different universe")
        c0 = Fraction(coeff)
        return Polynomial(self.u, {
            tuple(a + b for a, b in zip(e, term.e)): c * c0
            for e, c in self._d.items()})

    # -- substitution / conversion -----------------------------------------------

    def substitute(self, rules: Mapping[str, "Polynomial | Scalar"]) -> "Polynomial":
        """Apply the ring homomorphism sending each named variable to the
        given polynomial (or scalar); other variables map to themselves."""
        if not rules:
            return self
        images: dict[int, Polynomial] = {}
        for name, img in rules.items():
            idx = self.u.index_of(name)
            if isinstance(img, (int, Fraction)):
                img = Polynomial.constant(self.u, img)
            elif img.u != self.u:
                raise UniverseMismatchError(
                    f"substitution image for {name!r} lives in a different universe")
            images[idx] = img
        power_cache: dict[tuple[int, int], Polynomial] = {}

        def image_power(idx: int, a: int) -> Polynomial:
            try:
                return power_cache[(idx, a)]
            except KeyError:
                p = images[idx] ** a
                power_cache[(idx, a)] = p
                return p

        out = Polynomial.zero(self.u)
        for e, c in self._d.items():
            kept = list(e)
            factor = None
            for idx in images:
                a = e[idx]
                if a:
                    kept[idx] = 0
                    p = image_power(idx, a)
                    factor = p if factor is None else factor * p
            base = Polynomial(self.u, {tuple(kept): c})
            out = out + (base if factor is None else base * factor)
        return out

    def convert(self, target: VariableUniverse) -> "Polynomial":
        """Re-express over another universe; every variable actually
        appearing must exist in the target."""
        if target == self.u:
            return self
        proj = self.u.projection_to(target)
        width = len(target.names)
        d: dict[tuple[int, ...], Fraction] = {}
        for e, c in self._d.items():
            out = [0] * width
            for k, a in enumerate(e):
                if a:
                    j = proj[k]
                    if j is None:
                        raise UniverseMismatchError(
                            f"variable {self.u.names[k]!r} is absent from the target universe")
                    out[j] = a
            d[tuple(out)] = c
        return Polynomial(target, d)

    # -- predicates ------------------------------------------------------------------

    def homogeneous_degree(self, weights: Mapping[str, int]) -> int | None:
        """Common weighted degree of all terms, or None if inhomogeneous.
        The zero polynomial is homogeneous of every degree (returns 0)."""
        degs = {Term(self.u, e).weighted_degree(weights) for e in self._d}
        if not degs:
            return 0
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self, weights: Mapping[str, int]) -> bool:
        return self.homogeneous_degree(weights) is not None

    # -- formatting --------------------------------------------------------------------

    def _display_key(self, e: tuple[int, ...]):
        x_idx = self.u.indices_of_kind("x")
        c_idx = self.u.indices_of_kind("c")
        t_idx = self.u.indices_of_kind("t")
        xs = tuple(e[i] for i in x_idx)
        cs = tuple(e[i] for i in c_idx)
        ts = tuple(e[i] for i in t_idx)
        return (sum(xs), xs, sum(cs), cs, ts)

    def sorted_exponents(self) -> list[tuple[int, ...]]:
        return sorted(self._d, key=self._display_key, reverse=True)

    def format(self) -> str:
        if not self._d:
            return "0"
        pieces = []
        for k, e in enumerate(self.sorted_exponents()):
            c = self._d[e]
            term = Term(self.u, e)
            mono = term.format()
            neg = c < 0
            mag = -c if neg else c
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if k == 0:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return self.format()

    # -- JSON -------------------------------------------------------------------------

    def to_json(self) -> list[dict]:
        return [{"exponents": Term(self.u, e).exponents(), "coeff": str(self._d[e])}
                for e in self.sorted_exponents()]

    @classmethod
    def from_json(cls, data: Sequence[Mapping], universe: VariableUniverse) -> "Polynomial":
        d: dict[tuple[int, ...], Fraction] = {}
        for entry in data:
            try:
                t = universe.term({k: int(v) for k, v in entry["exponents"].items()})
                c = Fraction(entry["coeff"])
            except (KeyError, ValueError, TypeError) as exc:
                raise ParseError(f"bad polynomial JSON entry {entry!r}: {exc}") from None
            d[t.e] = d.get(t.e, Fraction(0)) + c
        return cls(universe, d)


# -- division ------------------------------------------------------------------------


def divide(f: Polynomial, divisors: Sequence[Polynomial],
           ordering: TermOrdering) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division: ``f = sum(q[i]*divisors[i]) + r`` with no
    term of ``r`` divisible by any divisor's leading term.

    Deterministic: at each step the ordering-largest term of the working
    polynomial is reduced by the first divisor (in list order) whose
    leading term divides it.
    """
    if any(d.is_zero for d in divisors):
        raise ValueError("divisors must be nonzero")
    quotients = [Polynomial.zero(f.u) for _ in divisors]
    if not divisors:
        return quotients, f
    leads = [d.leading(ordering) for d in divisors]
    remainder = Polynomial.zero(f.u)
    p = f
    while not p.is_zero:
        t, c = p.leading(ordering)
        for k, (lt, lc) in enumerate(leads):
            if lt.divides(t):
                factor = Polynomial.from_term(t.div(lt), c / lc)
                quotients[k] = quotients[k] + factor
                p = p - factor * divisors[k]
                break
        else:
            mono = Polynomial.from_term(t, c)
            remainder = remainder + mono
            p = p - mono
    return quotients, remainder


# -- parsing -------------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<name>[A-Za-z_][A-Za-z_0-9]*(\[\s*\d+\s*,\s*\d+\s*\])?)
  | (?P<number>\d+)
  | (?P<op>[\^*+\-/()])
  | (?P<ws>\s+)
""", re.VERBOSE)


def _tokenize(text: str) -> list[str]:
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r} in {text!r}")
        pos = m.end()
        if not m.lastgroup == "ws":
            tokens.append(re.sub(r"\s+", "", m.group()))
    return tokens


class _Parser:
    def __init__(self, tokens: list[str], universe: VariableUniverse):
        self.tokens = tokens
        self.pos = 0
        self.u = universe

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        poly = self.parse_sum()
        if self.peek() is not None:
            raise ParseError(f"trailing input at token {self.peek()!r}")
        return poly

    def parse_sum(self) -> Polynomial:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        total = self.parse_product().scale(sign)
        while self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
            total = total + self.parse_product().scale(sign)
        return total

    def parse_product(self) -> Polynomial:
        out = self.parse_factor()
        while self.peek() == "*":
            self.take()
            out = out * self.parse_factor()
        return out

    def parse_factor(self) -> Polynomial:
        tok = self.take()
        if tok == "(":
            inner = self.parse_sum()
            if self.take() != ")":
                raise ParseError("missing closing parenthesis")
            return self._maybe_power(inner)
        if tok.isdigit():
            value = Fraction(int(tok))
            if self.peek() == "/":
                self.take()
                den = self.take()
                if not den.isdigit() or int(den) == 0:
                    raise ParseError(f"bad denominator {den!r}")
                value /= int(den)
            return Polynomial.constant(self.u, value)
        if tok in ("+", "-", "*", "^", "/", ")"):
            raise ParseError(f"unexpected operator {tok!r}")
        if tok not in self.u:
            raise ParseError(f"unknown variable {tok!r}")
        return self._maybe_power(Polynomial.variable(self.u, tok))

    def _maybe_power(self, base: Polynomial) -> Polynomial:
        if self.peek() == "^":
            self.take()
            exp = self.take()
            if not exp.isdigit():
                raise ParseError(f"bad exponent {exp!r}")
            return base ** int(exp)
        return base


def parse_polynomial(text: str, universe: VariableUniverse) -> Polynomial:
    """Parse the human-readable format, e.g. ``y^2 - c[1,2] - c[2,2]*x``."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial")
    return _Parser(tokens, universe).parse()
