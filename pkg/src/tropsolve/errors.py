"""Exception types shared across the library."""


class TropicalError(Exception):
    """Base class for all tropsolve errors."""


class ShapeError(TropicalError, ValueError):
    """Operands have incompatible or invalid dimensions."""


class DomainError(TropicalError, ValueError):
    """A value lies outside an operation's domain (zero inversion,
    non-regular vector where a regular one is required, NaN input, ...)."""


class ParseError(TropicalError, ValueError):
    """Malformed text input. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceError(TropicalError, RuntimeError):
    """A computation would exceed a configured enumeration cap."""


class HypothesisError(TropicalError, ValueError):
    """A solver hypothesis does not hold. ``hypothesis`` names which one."""

    def __init__(self, message: str, hypothesis: str):
        self.hypothesis = hypothesis
        super().__init__(message)
