"""Exception types shared across the package."""


class SidispecError(Exception):
    """Base class for every error raised by this package."""


class InvalidSidigraph(SidispecError, ValueError):
    """A sidigraph violates a structural invariant (self-loop, bad index, ...)."""


class InvalidEdge(InvalidSidigraph):
    """A signed-graph edge cannot be converted to a pair of opposite arcs."""


class MissingArc(SidispecError, LookupError):
    """An operation referenced an arc that is not present."""


class CycleBudgetExceeded(SidispecError):
    """Cycle or linear-subgraph enumeration exceeded its configured cap."""


class OracleBoundExceeded(SidispecError):
    """The minor-based oracle was asked for a matrix above its size bound."""


class OrderMismatch(SidispecError, ValueError):
    """Two sidigraphs of different order were compared."""


class ConvergenceFailure(SidispecError, ArithmeticError):
    """The polynomial root finder did not reach its stopping criterion."""


class QuadratureFailure(SidispecError, ArithmeticError):
    """Adaptive quadrature could not reach the requested tolerance."""


class NotInDelta1(SidispecError, ValueError):
    """An operation restricted to the alternating-coefficient class was
    handed a sidigraph outside it."""


class InvalidFamilySpec(SidispecError, ValueError):
    """Family parameters violate the construction's constraints."""


class SizeOverflow(SidispecError, ValueError):
    """A construction or computation would exceed its configured size bound."""


class SearchBudgetExceeded(SidispecError):
    """Randomized search exhausted its budget without a conclusive result."""


class FixtureValidationFailure(SidispecError):
    """A shipped fixture failed its recorded polynomial or structural flags."""


class ParseError(SidispecError, ValueError):
    """Malformed sidigraph or polynomial text input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")
