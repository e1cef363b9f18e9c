"""Exception types shared across the package."""


class PmeanPeelError(Exception):
    """Base class for errors raised by this package."""


class EdgeListParseError(PmeanPeelError, ValueError):
    """A line of an edge-list source could not be parsed.

    Attributes:
        line_number: 1-based line number of the offending line.
    """

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class ConfigurationError(PmeanPeelError, ValueError):
    """An algorithm was configured outside its supported parameter range."""


class OracleSizeError(PmeanPeelError, ValueError):
    """The graph is too large for exhaustive enumeration."""
