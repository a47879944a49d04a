"""Exception types shared across the package."""

from dataclasses import dataclass
from typing import Any


class RuPowerError(Exception):
    """Base class for all rupower errors."""


@dataclass(frozen=True)
class Violation:
    """One broken invariant: which field, which constraint, which value."""

    field: str
    constraint: str
    value: Any

    def __str__(self):
        return f"{self.field}: {self.constraint} (got {self.value!r})"


class ValidationError(RuPowerError):
    """Aggregate of every invariant violation found, kept in ``violations``."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class ModeViolationError(RuPowerError):
    """Operating point incompatible with the config's adaptation mode."""


class InfeasibleTargetError(RuPowerError):
    """Requested load exceeds the radio unit's peak rate."""


class ConvergenceError(RuPowerError):
    """Bisection failed to reach tolerance within the iteration cap."""


class ParseError(RuPowerError):
    """Malformed config or profile document."""

    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        locus = []
        if line is not None:
            locus.append(f"line {line}")
        if field is not None:
            locus.append(f"field {field!r}")
        if locus:
            message = f"{message} ({', '.join(locus)})"
        super().__init__(message)


class UnknownBaselineError(RuPowerError):
    """Baseline name does not match any of the given configurations."""
