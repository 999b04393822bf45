"""Exception classes shared across the package.

Every error raised on purpose derives from :class:`TabloidError`, so callers
(and the command-line front end) can catch the whole family at once. The class
name doubles as the error name shown on the command line.
"""


class TabloidError(Exception):
    """Base class for all domain errors."""


class InvalidArgumentError(TabloidError, ValueError):
    pass


class ParseError(TabloidError, ValueError):
    pass


class CapacityError(TabloidError):
    """Raised when an exhaustive enumeration would exceed the configured bound."""


class ShapeError(TabloidError, ValueError):
    pass


class InvalidFillingError(TabloidError, ValueError):
    pass


class CycleError(TabloidError, ValueError):
    """The task graph contains a directed cycle."""


class RowRateError(TabloidError, ValueError):
    """Processors sharing a tabloid row do not share an execution rate."""


class SingularMatrixError(TabloidError, ValueError):
    pass


class ZeroVectorError(TabloidError, ValueError):
    """A cosine similarity was requested for a vector of zero norm."""
