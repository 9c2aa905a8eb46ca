"""Exception types shared across the library."""


class SkewTraceError(Exception):
    """Base class for all library-specific errors."""


class NotSkewError(SkewTraceError):
    """Matrix failed the skew-symmetry check X^T = -X.

    Carries the first offending index pair (row-major scan of the
    lower triangle including the diagonal).
    """

    def __init__(self, index, message=None):
        self.index = tuple(index)
        super().__init__(message or f"matrix is not skew-symmetric at {self.index}")


class OddDimensionError(SkewTraceError):
    """Pfaffian-bearing operation received an odd-dimensional matrix."""

    def __init__(self, dim):
        self.dim = dim
        super().__init__(f"Pfaffian operations require even dimension, got {dim}")


class DimensionMismatchError(SkewTraceError):
    """Operands (or a file's declared dim and entry count) disagree."""


class DimensionTooLargeForOracleError(SkewTraceError):
    """Brute-force oracle refused a dimension above its factorial-cost cap."""

    def __init__(self, dim, cap):
        self.dim = dim
        self.cap = cap
        super().__init__(f"dimension {dim} exceeds oracle cap {cap}")


class SingularMatrixError(SkewTraceError):
    """Inverse requested of a (numerically) singular matrix."""


class AnticommutationViolatedError(SkewTraceError):
    """Triple-product identity requires AB + BA = 0 and BC + CB = 0."""


class MatrixParseError(SkewTraceError):
    """Matrix file/text could not be parsed; `where` points at the culprit."""

    def __init__(self, message, where=None):
        self.where = where
        super().__init__(message if where is None else f"{message} (at {where})")
