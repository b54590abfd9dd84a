"""
Exception hierarchy for primew.

Every error subclasses both `PrimewError` and the closest builtin, so callers
can catch either the library-wide base or the usual `ValueError`/`IndexError`.
"""


class PrimewError(Exception):
    """Base class for all errors raised by primew."""


class DomainError(PrimewError, ValueError):
    """An argument lies outside the domain of the function being evaluated."""

    def __init__(self, message: str, value: float | None = None):
        super().__init__(message)
        self.value = value


class RangeError(PrimewError, IndexError):
    """A query reaches beyond what a PrimeTable covers, or a sweep range is malformed."""


class ResourceError(PrimewError, MemoryError):
    """A requested sieve limit exceeds the configured ceiling."""

    def __init__(self, limit: int, ceiling: int):
        super().__init__(f"sieve limit {limit} exceeds the configured ceiling {ceiling}")
        self.limit = limit
        self.ceiling = ceiling


class ConvergenceError(PrimewError, ArithmeticError):
    """An iteration did not converge. On valid input this is a bug."""


class BracketError(PrimewError, ValueError):
    """No sign change was found inside a root-finding bracket."""


class AmbiguityError(PrimewError, ValueError):
    """More than one sign change was found inside a root-finding bracket."""

    def __init__(self, message: str, brackets: list[tuple[float, float]]):
        super().__init__(message)
        self.brackets = brackets
