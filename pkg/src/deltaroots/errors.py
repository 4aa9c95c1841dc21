"""Exception types shared across the package."""


class DeltaRootsError(Exception):
    """Base class for all package-specific errors."""


class NegativeEntryError(DeltaRootsError):
    """A delta-vector entry is negative."""


class AllZeroError(DeltaRootsError):
    """Every delta-vector entry is zero."""


class IndexOutOfRangeError(DeltaRootsError):
    """Basis index outside 0..floor(d/2)."""


class ParityViolationError(DeltaRootsError):
    """Polynomial has mixed-parity terms where pure parity is required."""


class DegenerateInputError(DeltaRootsError):
    """Constant polynomial passed to the root solver."""


class NoConvergenceError(DeltaRootsError):
    """Solver hit the iteration cap; partial results attached."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class AmbiguousClassificationError(DeltaRootsError):
    """A real-axis candidate could not be isolated by sign-count brackets."""


class InconclusiveCheckError(DeltaRootsError):
    """A root's error radius straddles a check boundary even at max precision."""


class UnsupportedDimensionError(DeltaRootsError):
    """No built-in catalog for the requested dimension."""


class TargetOutOfRangeError(DeltaRootsError):
    """Requested real root lies outside the realizable interval."""


class ParameterBelowThresholdError(DeltaRootsError):
    """Weight parameter too small: the reduced quadratic would go complex."""


class ParseError(DeltaRootsError):
    """Malformed input record."""

    def __init__(self, message, line_number=None):
        super().__init__(message)
        self.line_number = line_number
