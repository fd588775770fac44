"""Exception hierarchy shared by every module."""


class BmpError(Exception):
    """Base class for all library errors."""


class ParseError(BmpError, ValueError):
    """Malformed edge-list text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphValidationError(BmpError, ValueError):
    """Self-loop, duplicate edge, or out-of-range vertex."""


class FormatError(BmpError, ValueError):
    """Invalid graph6 bytes."""


class ParameterError(BmpError, ValueError):
    """Invalid generator parameters."""


class DisconnectedError(BmpError, ValueError):
    """Operation requires a connected graph."""


class PreconditionError(BmpError, ValueError):
    """A documented precondition does not hold."""


class CertificateError(BmpError, ValueError):
    """Malformed certificate (non-positive power, bad JSON, ...)."""


class SizeError(BmpError, ValueError):
    """Input exceeds a configured size cap."""
