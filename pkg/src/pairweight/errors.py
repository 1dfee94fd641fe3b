"""Exception types shared across the package."""


class GuardError(ValueError):
    """An enumeration would exceed the desk-scale size guard."""


class ConsistencyError(RuntimeError):
    """A proven invariant failed; indicates a bug, not bad input."""


class CodeFileError(ValueError):
    """Malformed code or isomorphism file."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
