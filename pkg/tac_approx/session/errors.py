from __future__ import annotations


class SessionError(Exception):
    """Base class for all session errors."""


class SessionSyntaxError(SessionError):
    """A session file does not follow the grammar."""

    def __init__(self, message: str, *, line: int, column: int = 1) -> None:
        """Initialize the error.

        Args:
            message: What was expected.
            line: One-based line of the offending text.
            column: One-based column of the offending text.
        """
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SessionSemanticError(SessionError):
    """A well-formed statement describes objects that do not make sense together."""


class UndefinedNameError(SessionSemanticError):
    """A statement or command refers to a name that was never declared."""
