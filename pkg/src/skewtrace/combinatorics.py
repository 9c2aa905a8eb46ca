"""Integer-partition machinery and complete Bell polynomials.

Every trace identity in this library reduces a determinant- or
Pfaffian-like quantity to a finite sum indexed by solutions of a linear
Diophantine equation

    sum_{l=1..L} l * k_l = weight        (k_l >= 0),

whose solutions are in bijection with the integer partitions of the
weight.  This module enumerates and counts those solutions, and
evaluates the complete Bell polynomials that collapse the partition
sums into an O(N^2) recursion.

Counting and enumeration are deliberately independent implementations
(a divisor-sum recursion versus bounded recursive descent) so that each
one cross-checks the other.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence


class BellTable(NamedTuple):
    """Complete Bell polynomial values B_0..B_N for fixed arguments.

    ``values[0]`` is always the multiplicative unit 1; ``values[n]``
    satisfies the binomial recursion

        B_n = sum_{m=1..n} C(n-1, m-1) * x_m * B_{n-m}.
    """

    values: tuple
    args: tuple


def partition_count(m: int) -> int:
    """Number of integer partitions of ``m``.

    Computed by the divisor-style recursion

        nu(m) = (1/m) * sum_{l=1..m} l * sum_{k=1..floor(m/l)} nu(m - l*k)

    with nu(0) = 1 and nu(m) = 0 for m < 0.  Total on m >= 0.
    """
    if m < 0:
        raise ValueError(f"partition_count requires m >= 0, got {m}")
    nu = [0] * (m + 1)
    nu[0] = 1
    for j in range(1, m + 1):
        total = 0
        for l in range(1, j + 1):
            for k in range(1, j // l + 1):
                total += l * nu[j - l * k]
        # the sum above is always divisible by j
        nu[j] = total // j
    return nu[m]


def enumerate_diophantine(n: int) -> list[tuple[int, ...]]:
    """All (k_1,...,k_n) with k_l >= 0 and sum l*k_l = n.

    Ordered lexicographically descending in k_1, then k_2, and so on,
    so output is deterministic and suitable for golden-file tests.
    The list has exactly ``partition_count(n)`` elements.
    """
    if n < 1:
        raise ValueError(f"enumerate_diophantine requires n >= 1, got {n}")
    out: list[tuple[int, ...]] = []
    prefix = [0] * n

    def descend(l: int, remaining: int) -> None:
        if l == n:
            # the last slot absorbs the remainder iff it is a multiple of n
            if remaining % n == 0:
                prefix[n - 1] = remaining // n
                out.append(tuple(prefix))
                prefix[n - 1] = 0
            return
        for k in range(remaining // l, -1, -1):
            prefix[l - 1] = k
            descend(l + 1, remaining - l * k)
        prefix[l - 1] = 0

    descend(1, n)
    return out


def enumerate_shifted(n: int) -> list[tuple[int, tuple[int, ...]]]:
    """All pairs (s, (k_1,...,k_{n-1})) with s + sum l*k_l = n - 1.

    The shift s ranges over 0..n-1 and is emitted in descending order;
    for fixed s the inner vectors are ``enumerate_diophantine(n-1-s)``
    padded with zeros to length n-1 (weight 0 contributes the single
    all-zero vector).  This is the index set of the inverse-matrix
    identities, where s selects the matrix power multiplying each
    partition term.
    """
    if n < 1:
        raise ValueError(f"enumerate_shifted requires n >= 1, got {n}")
    width = n - 1
    out: list[tuple[int, tuple[int, ...]]] = []
    for s in range(n - 1, -1, -1):
        weight = n - 1 - s
        if weight == 0:
            out.append((s, (0,) * width))
            continue
        for ks in enumerate_diophantine(weight):
            out.append((s, ks + (0,) * (width - len(ks))))
    return out


def complete_bell(args: Sequence) -> BellTable:
    """Complete Bell polynomials B_0..B_N of the given arguments.

    ``args`` is (x_1,...,x_N); scalars may be exact rationals or
    floats, and the binomial coefficients are exact integers either
    way, so an exact input yields an exact table.
    """
    xs = tuple(args)
    n_max = len(xs)
    values = [1]
    for n in range(1, n_max + 1):
        b_n = sum(
            math.comb(n - 1, m - 1) * xs[m - 1] * values[n - m]
            for m in range(1, n + 1)
        )
        values.append(b_n)
    return BellTable(values=tuple(values), args=xs)
