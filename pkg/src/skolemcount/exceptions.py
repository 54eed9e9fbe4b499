"""Exception hierarchy.

``DomainError`` covers invalid or unsupported inputs, ``BudgetError`` covers
inputs that are valid but too large for the configured resource limits. The
CLI maps the two to exit status 1 and 2 respectively.
"""


class SkolemCountError(Exception):
    """Base class for every error raised by this package."""


class DomainError(SkolemCountError, ValueError):
    pass


class BudgetError(SkolemCountError, RuntimeError):
    pass


class NotOmegaError(DomainError):
    """The characteristic polynomial has a factor that is not cyclotomic."""


class InsufficientPrimesError(DomainError):
    def __init__(self, message, failed_q=()):
        super().__init__(message)
        self.failed_q = tuple(failed_q)


class VerificationError(SkolemCountError, AssertionError):
    """An internal consistency check failed. Always indicates a bug."""
