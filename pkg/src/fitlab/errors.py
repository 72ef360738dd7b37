"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "FitlabError",
    "InvalidPermutation",
    "DegreeMismatch",
    "InvalidParameter",
    "InvalidPrime",
    "OrderCapExceeded",
    "LatticeCapExceeded",
    "StepBudgetExceeded",
    "NotNormal",
    "EmptyStructure",
    "DegenerateFactor",
    "ParseError",
]


class FitlabError(Exception):
    """Base class for all errors raised by this package."""


class InvalidPermutation(FitlabError):
    """An image sequence is not a bijection on its points."""


class DegreeMismatch(FitlabError):
    """Two permutations or groups act on different point sets."""


class InvalidParameter(FitlabError):
    """A builder or operation received an out-of-range argument."""


class InvalidPrime(FitlabError):
    """A prime parameter is not actually a prime number."""


class OrderCapExceeded(FitlabError):
    """Closure enumeration passed the configured order cap.

    ``partial_count`` holds how many elements were found before giving up.
    """

    def __init__(self, message: str, partial_count: int = 0) -> None:
        super().__init__(message)
        self.partial_count = partial_count


class LatticeCapExceeded(FitlabError):
    """A subgroup-lattice operation was asked about too large a group."""


class StepBudgetExceeded(FitlabError):
    """An iterated series passed its step budget without settling."""


class NotNormal(FitlabError):
    """An operation required a normal subgroup and did not get one."""


class EmptyStructure(FitlabError):
    """A structure that must be nonempty (e.g. a generator list) was empty."""


class DegenerateFactor(FitlabError):
    """A section H/K collapsed (H equals K) where a proper factor is required."""


class ParseError(FitlabError):
    """Malformed textual input.  Carries a 1-based line or column number."""

    def __init__(self, message: str, line: int | None = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
