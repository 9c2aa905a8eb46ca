"""Brute-force reference evaluators for determinants and Pfaffians.

These realize the Levi-Civita contractions literally, as signed sums
over permutations (determinant) and perfect matchings (Pfaffian), never
as stored rank-n tensors.  They are factorial-cost and exist purely as
oracles: every fast path in the library is tested against them over
exact rationals with zero tolerance.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

from .errors import DimensionTooLargeForOracleError
from .matrices import (
    even_dim,
    field_one,
    field_zero,
    is_exact,
    require_square,
    skew_entries,
)

# caps keep the factorial-cost paths under a second; override per call
DET_ORACLE_CAP = 8
PF_ORACLE_CAP = 12


def _check_cap(dim: int, cap: int, override: int | None) -> None:
    limit = cap if override is None else override
    if dim > limit:
        raise DimensionTooLargeForOracleError(dim, limit)


def perm_sign(perm) -> int:
    """Sign of a permutation given as a sequence of distinct indices."""
    inversions = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


def perfect_matchings(items: list[int]):
    """Yield all pairings of `items`, each pair (a, b) with a before b.

    Pairs are emitted with increasing first elements, so each matching
    appears exactly once: there are (2n)!/(2^n n!) of them.
    """
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, partner in enumerate(rest):
        for tail in perfect_matchings(rest[:i] + rest[i + 1 :]):
            yield [(first, partner)] + tail


def det_definition(mat: np.ndarray, max_dim: int | None = None):
    """Determinant as the signed sum over all dim! permutations."""
    dim = require_square(mat)
    _check_cap(dim, DET_ORACLE_CAP, max_dim)
    total = field_zero(is_exact(mat))
    for perm in permutations(range(dim)):
        term = field_one(is_exact(mat))
        for i, j in enumerate(perm):
            term = term * mat[i, j]
        total = total + perm_sign(perm) * term
    return total


def pf_definition(skew, max_dim: int | None = None):
    """Pfaffian as the signed sum over perfect matchings of the indices.

    Equivalent to the Levi-Civita contraction after removing its
    2^n n!-fold redundancy.  The empty matrix has Pfaffian 1.
    """
    mat = skew_entries(skew)
    dim = even_dim(mat)
    _check_cap(dim, PF_ORACLE_CAP, max_dim)
    exact = is_exact(mat)
    total = field_zero(exact)
    for matching in perfect_matchings(list(range(dim))):
        flat = [idx for pair in matching for idx in pair]
        term = field_one(exact)
        for i, j in matching:
            term = term * mat[i, j]
        total = total + perm_sign(flat) * term
    return total


def _minor(mat: np.ndarray, drop_rows, drop_cols) -> np.ndarray:
    keep_r = [i for i in range(mat.shape[0]) if i not in drop_rows]
    keep_c = [j for j in range(mat.shape[1]) if j not in drop_cols]
    return mat[np.ix_(keep_r, keep_c)]


def adjugate_definition(mat: np.ndarray, max_dim: int | None = None) -> np.ndarray:
    """Cofactor matrix: det(C) * C^{-1}, defined for singular C too.

    Entry (i, j) is (-1)^{i+j} times the determinant of the minor with
    row j and column i removed, each minor evaluated by the
    permutation-sum oracle.
    """
    dim = require_square(mat)
    _check_cap(dim, DET_ORACLE_CAP, max_dim)
    out = np.empty_like(mat)
    for i in range(dim):
        for j in range(dim):
            minor = _minor(mat, {j}, {i})
            cof = det_definition(minor, max_dim=dim)
            out[i, j] = cof if (i + j) % 2 == 0 else -cof
    return out


def pf_adjugate_definition(skew, max_dim: int | None = None) -> np.ndarray:
    """pf(A) * A^{-1} via Pfaffian minors; valid for singular A as well.

    Entry (r, c) is (-1)^{r+c+1+[c>r]} times the Pfaffian of A with
    rows and columns {r, c} deleted (zero on the diagonal).  The sign
    bookkeeping is pinned by the defining property A @ result =
    pf(A) * I, which the test suite checks exactly.
    """
    mat = skew_entries(skew)
    dim = even_dim(mat)
    _check_cap(dim, PF_ORACLE_CAP, max_dim)
    exact = is_exact(mat)
    out = np.empty_like(mat)
    for r in range(dim):
        for c in range(dim):
            if r == c:
                out[r, c] = field_zero(exact)
                continue
            sub = _minor(mat, {r, c}, {r, c})
            pf_sub = pf_definition(sub, max_dim=max(dim - 2, 0))
            sign = -1 if (r + c + 1 + (1 if c > r else 0)) % 2 else 1
            out[r, c] = sign * pf_sub
    return out
