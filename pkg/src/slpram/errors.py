"""Exception types shared by more than one module."""


class SlpramError(Exception):
    """Base class for all package-specific errors."""


class BudgetExceeded(SlpramError):
    """A size, step or iteration budget was exhausted before completion."""


class ParseError(SlpramError):
    """Malformed input text; carries a 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
