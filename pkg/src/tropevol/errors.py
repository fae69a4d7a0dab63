"""Exception types shared across the package.

The CLI maps these onto process exit codes, so library code should raise the
most specific one that applies instead of bare ValueError.
"""

from __future__ import annotations


class TropevolError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(TropevolError):
    """Malformed or out-of-domain input (bad matrix, bad point, bad flag)."""


class GuardExceeded(TropevolError):
    """An enumeration would exceed the configured work guard.

    Attributes:
        required: estimated number of elementary steps the call would need.
        limit: the guard value that was in effect.
    """

    def __init__(self, message: str, required: int | None = None, limit: int | None = None):
        super().__init__(message)
        self.required = required
        self.limit = limit


class CrossCheckError(TropevolError):
    """Two independent computations of the same quantity disagree."""
