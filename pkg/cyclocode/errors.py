"""Exception hierarchy, each family maps to a CLI exit code."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from cyclocode.core.models import Violation

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_BUDGET = 3
EXIT_CONSISTENCY = 4


class CycloCodeError(Exception):
    """Base class for every error raised by cyclocode."""

    exit_code: int = EXIT_CONSISTENCY


# ── Validation family ────────────────────────────────────────────────


class ValidationError(CycloCodeError):
    exit_code = EXIT_VALIDATION


class SpecInvalid(ValidationError, ValueError):
    """A code spec violates one or more constraints."""

    def __init__(self, violations: list[Violation]):
        self.violations = list(violations)
        names = ", ".join(v.code for v in self.violations) or "(none)"
        details = "; ".join(v.message for v in self.violations)
        super().__init__(f"Invalid spec [{names}]: {details}")


class NotPrime(ValidationError, ValueError):
    pass


class FieldTooLarge(ValidationError, ValueError):
    pass


class DimensionMismatch(ValidationError, ValueError):
    pass


class ZeroArgument(ValidationError, ZeroDivisionError):
    pass


class ZeroInDefiningSet(ValidationError, ValueError):
    pass


class MixedContexts(ValidationError, ValueError):
    pass


class GridParseError(ValidationError, ValueError):
    pass


class RankDeficient(ValidationError, ValueError):
    pass


class NotApplicable(ValidationError, ValueError):
    pass


class InvalidArgument(ValidationError, ValueError):
    pass


# ── Budget family ────────────────────────────────────────────────────


class BudgetExceeded(CycloCodeError):
    exit_code = EXIT_BUDGET


# ── Internal consistency family ──────────────────────────────────────


class ConsistencyError(CycloCodeError):
    exit_code = EXIT_CONSISTENCY


class NonIntegerResult(ConsistencyError):
    pass


class NoPrimitivePolyFound(ConsistencyError):
    pass
