"""Determinants, Pfaffians and inverses as finite sums of trace powers.

Every operation here evaluates one of the closed-form identities that
express det(C), pf(A)pf(B), adjugates and (scaled) inverses through the
traces tr(M^l) of matrix powers.  Each identity exists in two
algebraically equivalent shapes:

* a *partition form*: an explicit sum over solutions of the linear
  Diophantine equation sum l*k_l = weight, and
* a *Bell form*: the same sum collapsed into complete Bell polynomials
  evaluated by their O(n^2) recursion.

The Bell forms are the primary implementations (O(n^4) end to end,
dominated by the trace computation); the partition forms are retained
as independent evaluation paths so the two can cross-check each other
exactly over rationals.

Sign conventions follow the closed statements that survive exact
oracle equivalence; in the raw partition sums the alternating factor
is applied for every index l from 1 up to the slot count, including
slots with k_l = 0 (skipping the empty slots flips signs and is
wrong -- the n = 2 adjugate already breaks).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .combinatorics import complete_bell, enumerate_diophantine, enumerate_shifted
from .errors import (
    AnticommutationViolatedError,
    DimensionMismatchError,
    SingularMatrixError,
)
from .matrices import (
    check_skew,
    even_dim,
    field_one,
    field_zero,
    float_tolerance,
    identity_matrix,
    is_exact,
    matrix_powers,
    max_abs,
    reference_j,
    require_square,
    skew_entries,
    trace_powers,
    values_equal,
    zero_matrix,
)


@dataclass(frozen=True)
class SemiCharPolynomial:
    """p_n(lambda) = sum_s coeffs[s] * lambda^s for a skew pair (A, B).

    Degree is exactly ``half_degree`` = dim/2; the leading coefficient
    is 1 and the constant term equals pf(A)*pf(B).  Its square is the
    characteristic polynomial of AB, and p_n(AB) = 0.  Root extraction
    is left to the caller.
    """

    coeffs: tuple
    half_degree: int


def bell_args_determinant(traces) -> list:
    """x_j = -(j-1)! * tr(C^j) for the determinant-flavoured identities."""
    return [-math.factorial(j - 1) * traces[j - 1] for j in range(1, len(traces) + 1)]


def bell_args_pfaffian(traces) -> list:
    """x_j = -(j-1)!/2 * tr((AB)^j) for the Pfaffian-flavoured identities."""
    xs = []
    for j in range(1, len(traces) + 1):
        t = traces[j - 1]
        if isinstance(t, float):
            xs.append(-0.5 * math.factorial(j - 1) * t)
        else:
            xs.append(Fraction(-math.factorial(j - 1), 2) * t)
    return xs


def _scaled(value, num: int, den: int, exact: bool):
    """value * num/den without leaving the exact field."""
    if exact:
        return Fraction(num, den) * value
    return value * (num / den)


def _mat_trace(mat: np.ndarray):
    t = np.trace(mat)
    return t if is_exact(mat) else float(t)


def _power_series(coeffs, powers, dim: int, exact: bool) -> np.ndarray:
    """sum_s coeffs[s] * M^s with powers = [M^1, M^2, ...]."""
    acc = coeffs[0] * identity_matrix(dim, exact)
    for s in range(1, len(coeffs)):
        acc = acc + coeffs[s] * powers[s - 1]
    return acc


def _partition_coeff(ks, traces, exact: bool, half: bool):
    """Contribution of one Diophantine solution to a partition sum.

    ``half`` selects the Pfaffian flavour: an extra 2^{k_l} in each
    denominator and the alternating sign (-1)^{k_l} instead of
    (-1)^{k_l + 1}.  The alternating factor counts every slot, so the
    determinant flavour carries the global (-1)^{slots}.
    """
    total_k = sum(ks)
    sign = (-1) ** (total_k if half else total_k + len(ks))
    value = field_one(exact)
    for l, k in enumerate(ks, start=1):
        if k == 0:
            continue
        den = math.factorial(k) * l**k * (2**k if half else 1)
        value = _scaled(value * traces[l - 1] ** k, 1, den, exact)
    return sign * value


def _skew_pair(a, b):
    """Validated equal-dimension even skew pair in one scalar regime."""
    A = skew_entries(a)
    B = skew_entries(b)
    if A.shape != B.shape:
        raise DimensionMismatchError(f"skew pair dims differ: {A.shape} vs {B.shape}")
    if is_exact(A) != is_exact(B):
        raise TypeError("mixed scalar regimes in one computation")
    dim = even_dim(A)
    return A, B, dim, is_exact(A)


# ---------------------------------------------------------------------------
# general square matrices: determinant, adjugate, inverse


def det_via_bell(mat: np.ndarray):
    """det(C) = (-1)^n / n! * B_n(x), x_j = -(j-1)! tr(C^j)."""
    dim = require_square(mat)
    exact = is_exact(mat)
    traces = trace_powers(mat, dim)
    bell = complete_bell(bell_args_determinant(traces)).values
    return _scaled(bell[dim], (-1) ** dim, math.factorial(dim), exact)


def det_via_partitions(mat: np.ndarray):
    """det(C) as the explicit sum over partitions of n (cross-check path)."""
    dim = require_square(mat)
    exact = is_exact(mat)
    traces = trace_powers(mat, dim)
    total = field_zero(exact)
    for ks in enumerate_diophantine(dim):
        total = total + _partition_coeff(ks, traces, exact, half=False)
    return total


def adjugate_via_bell(mat: np.ndarray) -> np.ndarray:
    """det(C) C^{-1} = sum_{s=1..n} C^{s-1} (-1)^{n-1} B_{n-s}(x)/(n-s)!.

    Defined for singular C as well (it is the cofactor matrix).
    """
    dim = require_square(mat)
    exact = is_exact(mat)
    powers = matrix_powers(mat, dim - 1)
    traces = [_mat_trace(p) for p in powers]
    bell = complete_bell(bell_args_determinant(traces)).values
    sign = (-1) ** (dim - 1)
    coeffs = [
        _scaled(bell[dim - 1 - s], sign, math.factorial(dim - 1 - s), exact)
        for s in range(dim)
    ]
    return _power_series(coeffs, powers, dim, exact)


def adjugate_via_partitions(mat: np.ndarray) -> np.ndarray:
    """Adjugate as the shifted partition sum (cross-check path)."""
    dim = require_square(mat)
    exact = is_exact(mat)
    powers = matrix_powers(mat, dim - 1)
    traces = [_mat_trace(p) for p in powers]
    coeffs = [field_zero(exact)] * dim
    for s, ks in enumerate_shifted(dim):
        coeffs[s] = coeffs[s] + _partition_coeff(ks, traces, exact, half=False)
    return _power_series(coeffs, powers, dim, exact)


def inverse_via_bell(mat: np.ndarray) -> np.ndarray:
    """C^{-1} from the Bell-form adjugate divided by the Bell-form det."""
    dim = require_square(mat)
    exact = is_exact(mat)
    powers = matrix_powers(mat, dim)
    traces = [_mat_trace(p) for p in powers]
    bell = complete_bell(bell_args_determinant(traces)).values
    det = _scaled(bell[dim], (-1) ** dim, math.factorial(dim), exact)
    if exact:
        if det == 0:
            raise SingularMatrixError("exact determinant is zero")
        inv_det = Fraction(1) / det
    else:
        if abs(det) <= 1e-12 * (1.0 + float(max_abs(mat))) ** dim:
            raise SingularMatrixError(f"determinant {det} below singularity threshold")
        inv_det = 1.0 / det
    sign = (-1) ** (dim - 1)
    coeffs = [
        _scaled(bell[dim - 1 - s], sign, math.factorial(dim - 1 - s), exact) * inv_det
        for s in range(dim)
    ]
    return _power_series(coeffs, powers, dim, exact)


# ---------------------------------------------------------------------------
# skew pairs: Pfaffian product, scaled inverses, semi-characteristic polynomial


def pf_product(a, b):
    """pf(A) pf(B) = B_n(x)/n! with x_j = -(j-1)!/2 tr((AB)^j).

    O(n^4) scalar operations, dominated by the n-1 multiplications
    behind the trace vector.  In the float regime both factors are
    pre-scaled by their largest entry (pf is degree-n homogeneous), so
    the factorially weighted Bell arguments stay inside float range
    for dimensions into the hundreds.
    """
    A, B, dim, exact = _skew_pair(a, b)
    n = dim // 2
    if exact:
        traces = trace_powers(A @ B, n)
        bell = complete_bell(bell_args_pfaffian(traces)).values
        return _scaled(bell[n], 1, math.factorial(n), exact)
    sa, sb = max_abs(A), max_abs(B)
    if sa == 0.0 or sb == 0.0:
        return 0.0
    traces = trace_powers((A @ B) / (sa * sb), n)
    bell = complete_bell(bell_args_pfaffian(traces)).values
    return (bell[n] / math.factorial(n)) * (sa * sb) ** n


def pf_product_via_partitions(a, b):
    """pf(A) pf(B) as the explicit partition sum (cross-check path)."""
    A, B, dim, exact = _skew_pair(a, b)
    n = dim // 2
    traces = trace_powers(A @ B, n)
    total = field_zero(exact)
    for ks in enumerate_diophantine(n):
        total = total + _partition_coeff(ks, traces, exact, half=True)
    return total


def pfaffian(a):
    """pf(A) computed as pf_product(A, J) with the reference J (pf(J) = 1)."""
    A = skew_entries(a)
    dim = even_dim(A)
    return pf_product(A, reference_j(dim, is_exact(A)))


def skew_inverse_scaled(a, b) -> np.ndarray:
    """pf(A) pf(B) A^{-1} = -sum_{s=1..n} (BA)^{s-1} B B_{n-s}(x)/(n-s)!.

    A polynomial in BA of degree n-1 times B; no division is performed,
    so the value exists whenever the traces do (for singular A it is
    the corresponding Pfaffian-adjugate combination).
    """
    A, B, dim, exact = _skew_pair(a, b)
    n = dim // 2
    powers = matrix_powers(B @ A, n - 1)
    traces = [_mat_trace(p) for p in powers]
    bell = complete_bell(bell_args_pfaffian(traces)).values
    coeffs = [
        _scaled(bell[n - 1 - s], -1, math.factorial(n - 1 - s), exact)
        for s in range(n)
    ]
    return _power_series(coeffs, powers, dim, exact) @ B


def skew_inverse_scaled_via_partitions(a, b) -> np.ndarray:
    """The same scaled inverse as the shifted partition sum (cross-check)."""
    A, B, dim, exact = _skew_pair(a, b)
    n = dim // 2
    powers = matrix_powers(B @ A, n - 1)
    traces = [_mat_trace(p) for p in powers]
    coeffs = [field_zero(exact)] * n
    for s, ks in enumerate_shifted(n):
        coeffs[s] = coeffs[s] + _partition_coeff(ks, traces, exact, half=True)
    coeffs = [-c for c in coeffs]
    return _power_series(coeffs, powers, dim, exact) @ B


def product_inverse_scaled(a, b) -> np.ndarray:
    """pf(A) pf(B) (AB)^{-1} as a degree n-1 polynomial in AB.

    The symmetric rewrite of the scaled skew inverse: only the powers
    (AB)^0 .. (AB)^{n-1} appear, half the 2n-1 bound that the generic
    adjugate identity needs for C = AB.
    """
    A, B, dim, exact = _skew_pair(a, b)
    n = dim // 2
    powers = matrix_powers(A @ B, n - 1)
    traces = [_mat_trace(p) for p in powers]
    coeffs = [field_zero(exact)] * n
    for s, ks in enumerate_shifted(n):
        coeffs[s] = coeffs[s] + _partition_coeff(ks, traces, exact, half=True)
    coeffs = [-c for c in coeffs]
    return _power_series(coeffs, powers, dim, exact)


def semichar_coeffs(a, b) -> SemiCharPolynomial:
    """Coefficients of p_n(lambda) = sum_s lambda^s B_{n-s}(x)/(n-s)!.

    Monic of degree n; the constant term is pf(A) pf(B); the zeros are
    the eigenvalues of AB.
    """
    A, B, dim, exact = _skew_pair(a, b)
    n = dim // 2
    traces = trace_powers(B @ A, n)
    bell = complete_bell(bell_args_pfaffian(traces)).values
    coeffs = tuple(
        _scaled(bell[n - s], 1, math.factorial(n - s), exact) for s in range(n + 1)
    )
    return SemiCharPolynomial(coeffs=coeffs, half_degree=n)


def semichar_residual(a, b) -> np.ndarray:
    """sum_{s=0..n} (AB)^s B_{n-s}(x)/(n-s)! -- identically zero.

    The Cayley-Hamilton analog p_n(AB) = 0 for skew pairs; exposed so
    callers and tests can assert the cancellation (exact zero over
    rationals, entrywise below tolerance over floats).
    """
    A, B, dim, exact = _skew_pair(a, b)
    n = dim // 2
    powers = matrix_powers(A @ B, n)
    traces = [_mat_trace(p) for p in powers]
    bell = complete_bell(bell_args_pfaffian(traces)).values
    coeffs = [
        _scaled(bell[n - s], 1, math.factorial(n - s), exact) for s in range(n + 1)
    ]
    return _power_series(coeffs, powers, dim, exact)


def pf_triple_identity_check(a, b, c) -> bool:
    """pf(AB) pf(C) == pf(A) pf(BC) for anticommuting skew triples.

    Requires AB + BA = 0 and BC + CB = 0 (then AB and BC are
    themselves skew); violations raise, they are caller bugs rather
    than a False result.
    """
    A = skew_entries(a)
    B = skew_entries(b)
    C = skew_entries(c)
    if not (A.shape == B.shape == C.shape):
        raise DimensionMismatchError("triple must share one dimension")
    even_dim(A)
    exact = is_exact(A)
    ab, ba = A @ B, B @ A
    bc, cb = B @ C, C @ B
    for lhs, rhs, tag in ((ab, ba, "AB"), (bc, cb, "BC")):
        if exact:
            bad = not bool((lhs + rhs == 0).all())
        else:
            bad = float(np.max(np.abs(lhs + rhs))) > float_tolerance(A, B, C)
        if bad:
            raise AnticommutationViolatedError(f"{tag} pair does not anticommute")
    left = pf_product(check_skew(ab), C)
    right = pf_product(A, check_skew(bc))
    return values_equal(left, right, A, B, C)
