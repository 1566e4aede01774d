"""Exception types raised across the package."""


class PolytoneError(Exception):
    """Base class for every error this package raises deliberately."""


class NonIncreasingNodes(PolytoneError):
    """Node abscissas are not strictly increasing (or two are nearly coincident)."""


class LengthMismatch(PolytoneError):
    """Paired sequences (nodes, targets, coefficients) differ in length."""


class DegenerateSpan(PolytoneError):
    """First and last node coincide, so no transform can be solved."""


class EmptyImage(PolytoneError):
    """The image contains no pixels."""


class ConstantImage(PolytoneError):
    """Every pixel has the same level; min and max anchors collapse."""


class TooFewDistinctLevels(PolytoneError):
    """The level spread cannot populate the initial node intervals."""


class DegenerateRange(PolytoneError):
    """Range endpoints coincide where a positive span is required."""


class IndexOutOfRange(PolytoneError, IndexError):
    """Interior node index outside the valid 2..n-1 band."""


class NodeOrderViolation(PolytoneError):
    """A node update produced a vector that is not strictly increasing."""

    def __init__(self, message: str, iteration: "int | None" = None):
        super().__init__(message)
        self.iteration = iteration


class MalformedHeader(PolytoneError):
    """PGM stream has a bad magic number, header field, or sample token."""


class TruncatedPayload(PolytoneError):
    """PGM raster holds fewer samples than the header promises."""


class SampleOutOfRange(PolytoneError):
    """PGM sample value lies outside [0, maxval]."""
