"""Asymptotic growth expressions, evaluated in log space."""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Iterable, Optional

import pandas as pd

from ..utils.errors import DomainError

SQRT_PI = math.sqrt(math.pi)


class EnvelopeKind(str, Enum):
    PANTS = "pants"
    FLIP = "flip"
    MULTIGRAPH_COUNT = "multigraph_count"
    SIMPLE_COUNT = "simple_count"
    TRIANGULATION_COUNT = "triangulation_count"
    ONE_PUNCTURE_MATCHINGS = "one_puncture_matchings"


@dataclass(frozen=True)
class EnvelopeConstants:
    """f ~ shape up to factors between c1 and c2."""
    c1: float
    c2: float
    shape: str

    def __post_init__(self):
        if not 0 < self.c1 < self.c2:
            raise DomainError(f"envelope constants must satisfy 0 < c1 < c2, got {self.c1}, {self.c2}")


@dataclass(frozen=True)
class EnvelopeValue:
    kind: EnvelopeKind
    argument: int
    log_value: float
    shape: str
    constants: Optional[EnvelopeConstants] = None

    @property
    def value(self) -> float:
        """exp(log_value), or inf when that overflows a float."""
        return math.exp(self.log_value) if self.log_value < 709.0 else math.inf


def _log_pants(g: int) -> float:
    return -0.5 * math.log(2 * g - 2) + g * (math.log(6 * g - 6) - math.log(4) - 1)


def _log_flip(g: int) -> float:
    return -1.5 * math.log(4 * g - 2) + 2 * g * (math.log(12 * g - 6) - 1)


def _log_cubic_power(n: int) -> float:
    return n / 2 * (math.log(3 * n) - math.log(4) - 1)


def _log_multigraph_count(n: int) -> float:
    return 2 - 0.5 * math.log(math.pi * n) + _log_cubic_power(n)


def _log_simple_count(n: int) -> float:
    return -2 - 0.5 * math.log(math.pi * n) + _log_cubic_power(n)


def _log_triangulation_count(g: int) -> float:
    n = 4 * g - 2
    return (math.log(2 / (3 * SQRT_PI)) - 1.5 * math.log(n)
            + (2 * g - 1) * (math.log(12 * g - 6) - 1))


def _log_one_puncture_matchings(n: int) -> float:
    return math.log(2 * math.sqrt(2) / (3 * n)) + 1.5 * n * (math.log(3 * n) - 1)


@dataclass(frozen=True)
class _Formula:
    evaluate: Callable[[int], float]
    minimum: int
    argument: str
    shape: str
    constants: Optional[EnvelopeConstants] = None


FORMULAS: Dict[EnvelopeKind, _Formula] = {
    EnvelopeKind.PANTS: _Formula(
        _log_pants, 2, "g", "(2g-2)^(-1/2) * ((6g-6)/(4e))^g",
        EnvelopeConstants(1 / (3 * math.e * SQRT_PI), math.e ** 3 / SQRT_PI,
                          "(2g-2)^(-1/2) * ((6g-6)/(4e))^g"),
    ),
    EnvelopeKind.FLIP: _Formula(
        _log_flip, 1, "g", "(4g-2)^(-3/2) * ((12g-6)/e)^(2g)",
        EnvelopeConstants(math.e / (18 * SQRT_PI), math.e / (6 * SQRT_PI),
                          "(4g-2)^(-3/2) * ((12g-6)/e)^(2g)"),
    ),
    EnvelopeKind.MULTIGRAPH_COUNT: _Formula(
        _log_multigraph_count, 2, "N", "e^2 / sqrt(pi N) * (3N/(4e))^(N/2)",
    ),
    EnvelopeKind.SIMPLE_COUNT: _Formula(
        _log_simple_count, 2, "N", "1 / (e^2 sqrt(pi N)) * (3N/(4e))^(N/2)",
    ),
    EnvelopeKind.TRIANGULATION_COUNT: _Formula(
        _log_triangulation_count, 1, "g", "2 / (3 sqrt(pi) (4g-2)^(3/2)) * ((12g-6)/e)^(2g-1)",
    ),
    EnvelopeKind.ONE_PUNCTURE_MATCHINGS: _Formula(
        _log_one_puncture_matchings, 2, "N", "2 sqrt(2) / (3N) * (3N/e)^(3N/2)",
    ),
}


def _kind(kind) -> EnvelopeKind:
    try:
        return EnvelopeKind(kind)
    except ValueError:
        known = ", ".join(k.value for k in EnvelopeKind)
        raise DomainError(f"unknown envelope kind '{kind}', expected one of {known}") from None


def envelope(kind, argument: int) -> EnvelopeValue:
    """Log of the named asymptotic expression at g (or N), with its constants if any."""
    kind = _kind(kind)
    formula = FORMULAS[kind]
    if argument < formula.minimum:
        raise DomainError(f"{kind.value} needs {formula.argument} >= {formula.minimum}, got {argument}")
    return EnvelopeValue(kind, argument, formula.evaluate(argument), formula.shape, formula.constants)


def envelope_table(kind, arguments: Iterable[int]) -> pd.DataFrame:
    """One row per argument: argument, log_value, value, c1, c2."""
    rows = []
    for argument in arguments:
        result = envelope(kind, argument)
        constants = result.constants
        rows.append({
            "argument": argument,
            "log_value": result.log_value,
            "value": result.value,
            "c1": constants.c1 if constants else math.nan,
            "c2": constants.c2 if constants else math.nan,
        })
    return pd.DataFrame(rows, columns=["argument", "log_value", "value", "c1", "c2"])
