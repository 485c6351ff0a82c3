"""Exception hierarchy shared by every layer of the package.

UsageError covers bad input (violated preconditions, exceeded bounds);
the CLI maps it to exit status 2.  DiagnosticError marks a violated
internal invariant, e.g. a leg-length difference that depends on the
removal order; the CLI maps it to exit status 3 so scripted callers can
tell the two apart.
"""


class FoulkesError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(FoulkesError):
    """Invalid argument or precondition failure."""


class BoundExceededError(UsageError):
    """An enumeration would exceed the configured size bound."""


class DiagnosticError(FoulkesError):
    """An internal invariant failed; the result would be untrustworthy."""
