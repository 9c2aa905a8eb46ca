"""Dense square matrices over two scalar regimes.

A matrix is a plain numpy ndarray.  The dtype declares the regime:

* ``object`` -- exact rational entries (`fractions.Fraction`); all
  arithmetic is exact, equality checks are literal.
* ``float64`` -- ordinary binary floats; equality checks are
  tolerance-based.

The regime is matrix-wide and never mixed inside one computation.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import DimensionMismatchError, NotSkewError, OddDimensionError

# float-regime skew check: tolerance relative to the largest entry magnitude
SKEW_REL_TOL = 1e-12


def is_exact(mat: np.ndarray) -> bool:
    """True when the array is in the exact-rational regime."""
    return mat.dtype == object


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, (float, np.floating)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def exact_matrix(rows) -> np.ndarray:
    """Build an exact-regime matrix from nested ints/strings/Fractions."""
    data = [[_to_fraction(v) for v in row] for row in rows]
    mat = np.empty((len(data), len(data[0]) if data else 0), dtype=object)
    for i, row in enumerate(data):
        if len(row) != mat.shape[1]:
            raise DimensionMismatchError("ragged rows in matrix literal")
        for j, v in enumerate(row):
            mat[i, j] = v
    return mat


def float_matrix(rows) -> np.ndarray:
    """Build a float-regime matrix."""
    return np.array(rows, dtype=np.float64)


def as_exact_entries(mat: np.ndarray) -> np.ndarray:
    """Copy of an exact-regime array with every entry coerced to Fraction.

    Object arrays may carry plain ints; coercing up front keeps later
    divisions exact (int/int would silently produce a float).
    """
    out = np.empty_like(mat)
    for idx, v in np.ndenumerate(mat):
        out[idx] = _to_fraction(v)
    return out


def field_one(exact: bool):
    return Fraction(1) if exact else 1.0


def field_zero(exact: bool):
    return Fraction(0) if exact else 0.0


def identity_matrix(dim: int, exact: bool = True) -> np.ndarray:
    if not exact:
        return np.eye(dim)
    mat = np.empty((dim, dim), dtype=object)
    for i in range(dim):
        for j in range(dim):
            mat[i, j] = Fraction(1) if i == j else Fraction(0)
    return mat


def zero_matrix(dim: int, exact: bool = True) -> np.ndarray:
    if not exact:
        return np.zeros((dim, dim))
    mat = np.empty((dim, dim), dtype=object)
    mat[...] = Fraction(0)
    return mat


def reference_j(dim: int, exact: bool = True) -> np.ndarray:
    """The canonical skew reference: diag([[0,1],[-1,0]], ...) with pf = 1."""
    if dim % 2 != 0:
        raise OddDimensionError(dim)
    mat = zero_matrix(dim, exact)
    one = field_one(exact)
    for k in range(0, dim, 2):
        mat[k, k + 1] = one
        mat[k + 1, k] = -one
    return mat


def require_square(mat: np.ndarray) -> int:
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {mat.shape}")
    return mat.shape[0]


class SkewMatrix:
    """A square matrix with the verified invariant X^T = -X.

    Construction validates the invariant (exactly in the rational
    regime, within ``SKEW_REL_TOL`` relative to the largest entry in
    the float regime) and raises :class:`NotSkewError` otherwise.
    """

    __slots__ = ("mat",)

    def __init__(self, mat: np.ndarray, tol: float | None = None):
        dim = require_square(mat)
        exact = is_exact(mat)
        if exact:
            for i in range(dim):
                for j in range(i + 1):
                    if mat[i, j] != -mat[j, i]:
                        raise NotSkewError((i, j))
        else:
            scale = float(np.max(np.abs(mat))) if dim else 0.0
            bound = (SKEW_REL_TOL if tol is None else tol) * scale
            for i in range(dim):
                for j in range(i + 1):
                    if abs(mat[i, j] + mat[j, i]) > bound:
                        raise NotSkewError((i, j))
        object.__setattr__(self, "mat", mat)

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    @property
    def exact(self) -> bool:
        return is_exact(self.mat)

    def __array__(self, dtype=None, copy=None):
        return self.mat if dtype is None else self.mat.astype(dtype)

    def __repr__(self):
        return f"SkewMatrix(dim={self.dim}, exact={self.exact})"


def check_skew(mat, tol: float | None = None) -> SkewMatrix:
    """Validate skew-symmetry and wrap; error names the first bad index."""
    if isinstance(mat, SkewMatrix):
        return mat
    return SkewMatrix(mat, tol)


def skew_entries(mat) -> np.ndarray:
    """Validated underlying array of a skew matrix (or SkewMatrix)."""
    return check_skew(mat).mat


def even_dim(mat) -> int:
    """Dimension of a matrix required to be even (Pfaffian-bearing)."""
    dim = require_square(mat)
    if dim % 2 != 0:
        raise OddDimensionError(dim)
    return dim


def mat_mul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Matrix product with an explicit dimension check."""
    require_square(x)
    require_square(y)
    if x.shape != y.shape:
        raise DimensionMismatchError(f"cannot multiply {x.shape} by {y.shape}")
    return x @ y


def matrix_powers(mat: np.ndarray, top: int) -> list[np.ndarray]:
    """[M^1, M^2, ..., M^top] by sequential multiplication."""
    require_square(mat)
    if top <= 0:
        return []
    powers = [mat]
    for _ in range(top - 1):
        powers.append(powers[-1] @ mat)
    return powers


def trace_powers(mat: np.ndarray, top: int) -> list:
    """Traces of M^1..M^top, streaming the powers (nothing stored).

    Costs top-1 matrix multiplications, i.e. O(top * dim^3) scalar
    operations.
    """
    require_square(mat)
    if top < 1:
        raise ValueError(f"trace_powers requires top >= 1, got {top}")
    traces = [_trace(mat)]
    power = mat
    for _ in range(top - 1):
        power = power @ mat
        traces.append(_trace(power))
    return traces


def _trace(mat: np.ndarray):
    t = np.trace(mat)
    return t if is_exact(mat) else float(t)


def max_abs(mat: np.ndarray):
    """Largest entry magnitude, exact in the rational regime."""
    if is_exact(mat):
        return max((abs(v) for v in mat.flat), default=Fraction(0))
    return float(np.max(np.abs(mat))) if mat.size else 0.0


def float_tolerance(*mats: np.ndarray) -> float:
    """Float-regime equality tolerance: 1e-9 * (1 + largest input entry)."""
    scale = max((float(max_abs(m)) for m in mats), default=0.0)
    return 1e-9 * (1.0 + scale)


def values_equal(x, y, *context: np.ndarray) -> bool:
    """Regime-aware scalar equality (exact, or within float_tolerance)."""
    if isinstance(x, float) or isinstance(y, float):
        return abs(x - y) <= float_tolerance(*context)
    return x == y


def matrices_equal(x: np.ndarray, y: np.ndarray, *context: np.ndarray) -> bool:
    """Regime-aware entrywise matrix equality."""
    if x.shape != y.shape:
        return False
    if is_exact(x) and is_exact(y):
        return bool((x == y).all())
    tol = float_tolerance(*(context or (x, y)))
    return bool(np.all(np.abs(x - y) <= tol))
