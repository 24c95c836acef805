"""Exception hierarchy shared by every engine in the SDK."""

from typing import Optional

# Exit-status categories, reused verbatim by the CLI
EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3


class ClutterError(Exception):
    """Base class for all SDK errors.

    Every error carries a ``code`` (the exit-status category the CLI reports)
    and a human readable ``message``.
    """

    code = EXIT_USAGE

    def __init__(self, message: str, code: Optional[int] = None):
        if code is not None:
            self.code = code
        self.message = message
        super().__init__(message)


class ParseError(ClutterError):
    """Malformed clutter, ideal, complex or table input."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{where}{message}")
        self.message = message


class PreconditionError(ClutterError):
    """An operation was called outside its domain."""


class GuardExceeded(ClutterError):
    """A size guard (ground set, clique enumeration) was exceeded."""


class RemovalError(ClutterError):
    """A removal step could not be applied."""

    code = EXIT_REFUTED

    def __init__(self, message: str, step_index: Optional[int] = None):
        self.step_index = step_index
        prefix = f"step {step_index}: " if step_index is not None else ""
        super().__init__(f"{prefix}{message}")
        self.message = message

    def at_step(self, step_index: int) -> "RemovalError":
        return type(self)(self.message, step_index)


class InvalidStep(RemovalError):
    """The step's element is not simplicial over the current clutter."""


class InvalidCircuits(RemovalError):
    """The step's circuit set is empty or not contained as required."""


class VerificationFailed(ClutterError):
    """A named verifier found a counterexample."""

    code = EXIT_REFUTED
