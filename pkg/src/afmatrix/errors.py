"""Exception hierarchy shared by every afmatrix module."""


class ArgumentationError(Exception):
    """Base class for all errors raised by afmatrix."""


class DuplicateArgument(ArgumentationError):
    pass


class UnknownArgument(ArgumentationError):
    pass


class EmptyFramework(ArgumentationError):
    pass


class ParseError(ArgumentationError):
    """Malformed APX/TGF input. ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptySelection(ArgumentationError):
    pass


class DimensionMismatch(ArgumentationError):
    pass


class PreconditionViolated(ArgumentationError):
    pass


class EnumerationLimitExceeded(ArgumentationError):
    pass


class OracleLimitExceeded(ArgumentationError):
    pass


class InternalInvariantViolated(ArgumentationError):
    pass
