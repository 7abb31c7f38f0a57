"""Exception types shared across the package."""


class DistrictGameError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidArgs(DistrictGameError, ValueError):
    """Arguments violate an operation's preconditions."""


class OutOfRange(DistrictGameError, ValueError):
    """A threshold lies outside the legal interval [1/2, 1)."""


class EmptyStrategySpace(DistrictGameError, ValueError):
    """A cap leaves one of the players with no strategies at all."""


class InfeasibleConstruction(DistrictGameError):
    """The equalizing construction needs an exact tie district that cannot exist."""


class BreakpointAmbiguity(DistrictGameError):
    """A step curve was evaluated at a jump point where no single value exists."""


class TooLarge(DistrictGameError):
    """An exhaustive enumeration would exceed the configured guard."""


class TheoremViolation(DistrictGameError):
    """A strict verification sweep found instances breaking an expected law."""


class ParseError(DistrictGameError, ValueError):
    """Malformed input data; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyFile(DistrictGameError, ValueError):
    """An input file contains no data rows."""


class UnsupportedFormat(DistrictGameError, ValueError):
    """An output format other than the supported ones was requested."""
