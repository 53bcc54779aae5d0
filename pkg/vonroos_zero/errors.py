#!/usr/bin/env python3


class VonRoosError(Exception):
    """Base class for every error raised by vonroos_zero."""

    reason = "error"


class DomainError(VonRoosError, ValueError):
    reason = "domain"


class VonRoosConstraintError(DomainError):
    reason = "von_roos_constraint"


class UnknownParameterSetError(VonRoosError, KeyError):
    reason = "unknown_parameter_set"

    def __str__(self):
        # KeyError quotes its argument; keep the plain message.
        return str(self.args[0]) if self.args else ""


class InadmissibleError(DomainError):
    """Raised when a radicand that must be non-negative is negative.

    `reason` is a short machine-readable tag such as "ell_radicand" or
    "f_radicand".
    """

    def __init__(self, message, reason="inadmissible"):
        super().__init__(message)
        self.reason = reason


class SeparationMismatchError(DomainError):
    reason = "separation_mismatch"


class InvalidBracketError(DomainError):
    reason = "invalid_bracket"


class GridError(DomainError):
    reason = "grid"


class EigenSolverError(VonRoosError, RuntimeError):
    reason = "eigensolver"


class UsageError(VonRoosError, ValueError):
    """Command-line arguments that fail validation."""

    reason = "usage"


class UnknownCaseError(DomainError):
    reason = "unknown_case"
