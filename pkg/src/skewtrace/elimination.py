"""Cubic-cost baselines: Pfaffian by congruence elimination, LU det/inverse.

The Pfaffian path is Parlett-Reid-style skew tridiagonalization: pairs
of symmetric row/column (congruence) eliminations with unit Gauss
transforms, which leave the Pfaffian invariant up to the recorded row
swaps.  Chosen over Householder congruence because it needs no square
roots and therefore runs unchanged over exact rationals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .errors import OddDimensionError
from .matrices import as_exact_entries, field_zero, is_exact, require_square, skew_entries


class EliminationReport(NamedTuple):
    """Observable outcome of an elimination run.

    ``pivot_sign`` is always (-1)**swap_count; ``growth`` is the
    largest intermediate magnitude seen (float regime only).
    """

    value: object
    pivot_sign: int
    swap_count: int
    growth: float | None


class LUResult(NamedTuple):
    """Determinant plus inverse; ``inverse`` is None for singular input."""

    det: object
    inverse: np.ndarray | None


def _swap_rows_cols(mat: np.ndarray, i: int, j: int) -> None:
    mat[[i, j], :] = mat[[j, i], :]
    mat[:, [i, j]] = mat[:, [j, i]]


def pf_elimination(skew) -> EliminationReport:
    """Pfaffian via skew-symmetric congruence reduction, Theta(n^3).

    Works down the even columns: the pivot is moved to the first
    subdiagonal slot (partial pivoting on column magnitude in the float
    regime, first nonzero over rationals), the rest of the column is
    eliminated by a rank-2 congruence update, and the Pfaffian is the
    signed product of the resulting superdiagonal entries.  A
    structurally singular input yields value 0, not an error.
    """
    mat = skew_entries(skew)
    dim = require_square(mat)
    if dim % 2 != 0:
        raise OddDimensionError(dim)
    exact = is_exact(mat)
    work = as_exact_entries(mat) if exact else mat.astype(np.float64, copy=True)

    swaps = 0
    value = Fraction(1) if exact else 1.0
    growth = None if exact else float(np.max(np.abs(work))) if dim else 0.0

    for k in range(0, dim - 1, 2):
        col = work[k + 1 :, k]
        if exact:
            pivot_offset = next((t for t, v in enumerate(col) if v != 0), None)
        else:
            pivot_offset = int(np.argmax(np.abs(col)))
            if col[pivot_offset] == 0.0:
                pivot_offset = None
        if pivot_offset is None:
            return EliminationReport(field_zero(exact), (-1) ** swaps, swaps, growth)
        pivot_row = k + 1 + pivot_offset
        if pivot_row != k + 1:
            _swap_rows_cols(work, k + 1, pivot_row)
            swaps += 1
        if k + 2 < dim:
            tau = work[k + 2 :, k] / work[k + 1, k]
            w = work[k + 2 :, k + 1].copy()
            work[k + 2 :, k + 2 :] += np.outer(tau, w) - np.outer(w, tau)
            if not exact:
                growth = max(growth, float(np.max(np.abs(work[k + 2 :, k + 2 :]))))
        value = value * work[k, k + 1]

    sign = (-1) ** swaps
    return EliminationReport(sign * value, sign, swaps, growth)


def lu_det_inverse(mat: np.ndarray) -> LUResult:
    """Determinant and inverse by Gauss-Jordan elimination, O(n^3).

    Partial pivoting on magnitude in the float regime, first nonzero
    over exact rationals; the determinant is the pivot product times
    the swap parity.  Singularity is reported in the result, never
    thrown.
    """
    dim = require_square(mat)
    exact = is_exact(mat)
    source = as_exact_entries(mat) if exact else mat.astype(np.float64, copy=True)

    if exact:
        work = np.empty((dim, 2 * dim), dtype=object)
        work[:, :dim] = source
        work[:, dim:] = Fraction(0)
        for i in range(dim):
            work[i, dim + i] = Fraction(1)
    else:
        work = np.hstack([source, np.eye(dim)])

    det = Fraction(1) if exact else 1.0
    for col in range(dim):
        rows = work[col:, col]
        if exact:
            offset = next((t for t, v in enumerate(rows) if v != 0), None)
        else:
            offset = int(np.argmax(np.abs(rows)))
            if rows[offset] == 0.0:
                offset = None
        if offset is None:
            return LUResult(field_zero(exact), None)
        if offset:
            work[[col, col + offset], :] = work[[col + offset, col], :]
            det = -det
        pivot = work[col, col]
        det = det * pivot
        work[col, col:] = work[col, col:] / pivot
        for r in range(dim):
            if r != col and work[r, col] != 0:
                work[r, col:] = work[r, col:] - work[r, col] * work[col, col:]
    return LUResult(det, work[:, dim:])
