"""Exception hierarchy for Narayana-Paths."""


class NarayanaError(Exception):
    """Base class for every error raised by this package."""


class PathParseError(NarayanaError, ValueError):
    """A step word is not a Dyck path. `position` is 1-based."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ForeignStepError(PathParseError):
    """Character outside the {U, D} alphabet."""


class NegativePrefixError(PathParseError):
    """Prefix goes below ground level."""


class UnbalancedPathError(PathParseError):
    """Word ends above ground level."""


class EmptyPathError(NarayanaError, ValueError):
    """Operation is undefined on the empty path."""


class DomainError(NarayanaError, ValueError):
    """Index arguments outside the domain of a counting function."""


class BoundExceededError(NarayanaError, ValueError):
    """Requested size is above the configured bound."""

    def __init__(self, what: str, requested: int, bound: int):
        super().__init__(
            f"{what} refused: requested {requested} exceeds the configured bound {bound}"
        )
        self.requested = requested
        self.bound = bound


class InexactDivisionError(NarayanaError, ArithmeticError):
    """A division that must be exact left a remainder."""


class PolyominoInvariantError(NarayanaError, ValueError):
    """Boundary pair violates a parallelogram polyomino invariant."""

    def __init__(self, clause: str):
        super().__init__(f"Invalid parallelogram polyomino: {clause}")
        self.clause = clause


class InfeasibleEndpointsError(NarayanaError, ValueError):
    """No monotone lattice path joins the requested endpoints."""


class SeriesError(NarayanaError, ValueError):
    """Power series operation precondition failed."""


class BFileFormatError(NarayanaError, ValueError):
    """Malformed OEIS b-file content."""

    def __init__(self, message: str, line_number: int | None = None):
        location = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{location}{message}")
        self.line_number = line_number
