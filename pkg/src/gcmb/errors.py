"""Exception hierarchy shared by all gcmb modules."""


class GcmbError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(GcmbError):
    """Caller violated a documented precondition (bad input, mismatched specs)."""


class CapacityError(GcmbError):
    """A desk-scale enumeration guard was exceeded."""


class ParseError(GcmbError):
    """An input file is malformed; message carries the line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InternalError(GcmbError):
    """An invariant that should be unbreakable was broken (bug signal)."""
