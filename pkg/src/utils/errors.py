"""Exception hierarchy; each class carries the CLI exit status it maps to."""

from typing import Optional


class ModsurfError(Exception):
    """Base class for toolkit errors."""
    exit_code = 1


class StructuralInputError(ModsurfError, ValueError):
    """Malformed pairing, map, permutation or input file."""
    exit_code = 2


class DomainError(ModsurfError, ValueError):
    """Argument outside the mathematical domain of an operation."""
    exit_code = 2


class UnflippableArcError(DomainError):
    """Arc whose two sides lie in the same triangle."""


class CapabilityError(ModsurfError):
    """Request exceeds a configured desk-scale cap."""
    exit_code = 3

    def __init__(self, cap: str, limit: int, requested: Optional[int] = None, detail: str = ""):
        self.cap = cap
        self.limit = limit
        self.requested = requested
        message = f"cap '{cap}' exceeded: limit {limit}"
        if requested is not None:
            message += f", requested {requested}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class RetryBudgetExceeded(CapabilityError):
    """Rejection sampling ran out of attempts."""

    def __init__(self, limit: int, detail: str = ""):
        super().__init__("max_attempts", limit, detail=detail)


class InvariantViolation(ModsurfError, AssertionError):
    """Internal consistency check failed; signals a bug."""
    exit_code = 1


def check_cap(cap: str, limit: int, requested: int, detail: str = "") -> None:
    """Raise CapabilityError when requested exceeds limit."""
    if requested > limit:
        raise CapabilityError(cap, limit, requested, detail)
