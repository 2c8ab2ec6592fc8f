"""Exception types shared across the package."""


class SchemeError(Exception):
    """Base class for all errors raised by this package."""


class UniverseMismatchError(SchemeError):
    """Operands live over different variable universes."""


class OrderingDomainError(SchemeError):
    """A term mentions a variable the ordering does not cover."""


class ParseError(SchemeError):
    """Malformed polynomial, monomial, or JSON input."""


class DivisorClosureError(SchemeError):
    """A candidate order ideal is not closed under divisors."""

    def __init__(self, term: str, missing: str):
        super().__init__(
            f"not an order ideal: {term} is present but its divisor {missing} is missing"
        )
        self.term = term
        self.missing = missing


class ResourceLimitError(SchemeError):
    """A configured safety cutoff was hit; the result would be incomplete."""

    def __init__(self, cutoff: str, limit: int):
        super().__init__(f"resource cutoff exceeded: {cutoff} (limit {limit})")
        self.cutoff = cutoff
        self.limit = limit


class MalformedRulesError(SchemeError):
    """A substitution rule's right side mentions an eliminated variable."""


class NotAPointError(SchemeError):
    """A coordinate assignment does not lie on the scheme."""

    def __init__(self, message: str, witness: str | None = None):
        super().__init__(message if witness is None else f"{message} (witness: {witness})")
        self.witness = witness


class PreconditionError(SchemeError):
    """A mathematical precondition of an operation is violated."""


class InvariantViolationError(SchemeError):
    """An internal invariant that should be unreachable was violated."""
