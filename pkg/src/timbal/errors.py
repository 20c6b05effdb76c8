"""Exception types shared across the package."""

from __future__ import annotations


class TimbalError(Exception):
    """Base class for errors raised by this package."""


class ParseError(TimbalError, ValueError):
    """An edge-list record could not be parsed.

    Carries the 1-based line number of the offending record when read
    from a file (``line`` is None for in-memory record sequences).
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ConvergenceError(TimbalError):
    """An iterative eigensolver failed to reach the requested residual.

    The best iterate found is attached so callers can inspect or reuse it.
    """

    def __init__(self, message: str, lambda1: float, v, residual: float,
                 iterations: int):
        super().__init__(message)
        self.lambda1 = lambda1
        self.v = v
        self.residual = residual
        self.iterations = iterations


class GuardViolation(TimbalError, ValueError):
    """An input exceeds a hard size guard (brute force, dense oracle)."""


class SelectionError(TimbalError):
    """No vertex is eligible for removal (all excluded from ranking)."""
