"""Exact permanent engines and the definition-level permanental polynomial.

Every engine works over Python integers when all entries are integral and
over :class:`fractions.Fraction` otherwise; floats are rejected.
"""
from __future__ import annotations

import math
from collections.abc import Sequence
from fractions import Fraction
from itertools import permutations

from .graph import SkewMatrix, _as_rational
from .poly import Poly

NAIVE_MAX_N = 10


class PermanentError(ValueError):
    pass


def as_matrix(a) -> list[list]:
    """Square list-of-lists of ints (all integral) or Fractions."""
    if isinstance(a, SkewMatrix):
        a = a.entries
    rows = [[_as_rational(x) for x in row] for row in a]
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise PermanentError(f"matrix is not square: row {i} has {len(row)} entries, expected {n}")
    if all(x.denominator == 1 for row in rows for x in row):
        return [[int(x) for x in row] for row in rows]
    return rows


def permanent_naive(a) -> int | Fraction:
    a = as_matrix(a)
    n = len(a)
    if n > NAIVE_MAX_N:
        raise PermanentError(f"naive permanent refused for n={n} > {NAIVE_MAX_N}")
    total = 0
    for pi in permutations(range(n)):
        total += math.prod(a[i][pi[i]] for i in range(n))
    return total


def permanent_ryser(a) -> int | Fraction:
    """Ryser inclusion-exclusion over column subsets in Gray-code order.

    ``per A = (-1)^n * sum_S (-1)^|S| prod_i sum_{j in S} a_ij``; each step
    toggles one column, so row sums update in O(n).
    """
    a = as_matrix(a)
    n = len(a)
    if n == 0:
        return 1
    cols = [[a[i][j] for i in range(n)] for j in range(n)]
    sums = [0] * n
    total = 0
    prod = math.prod
    sign = 1  # (-1)^|S| for the current subset
    prev = 0
    for k in range(1, 1 << n):
        gray = k ^ (k >> 1)
        flip = gray ^ prev
        prev = gray
        col = cols[flip.bit_length() - 1]
        if gray & flip:
            sums = [s + c for s, c in zip(sums, col)]
        else:
            sums = [s - c for s, c in zip(sums, col)]
        sign = -sign
        if sign > 0:
            total += prod(sums)
        else:
            total -= prod(sums)
    return -total if n & 1 else total


def _check_ryser_sign():
    # guards the (-1)^n convention: per(J_2) = 2, per(J_3) = 6
    if permanent_ryser([[1, 1], [1, 1]]) != 2 or permanent_ryser([[1] * 3] * 3) != 6:
        raise RuntimeError("Ryser sign convention self-test failed")


_check_ryser_sign()


def permanent_skew_even(a) -> int | Fraction:
    """Permanent of a skew-symmetric matrix summed over even-cycle permutations only.

    Permutations with an odd cycle cancel in pairs (reverse the odd cycle
    with the smallest least element), so only those whose cycles all have
    even length are enumerated.
    """
    if not isinstance(a, SkewMatrix):
        a = SkewMatrix(a)
    m = as_matrix(a)
    n = len(m)
    if n % 2 == 1:
        return 0
    if n == 0:
        return 1
    nz = [[j for j in range(n) if m[i][j] != 0] for i in range(n)]
    total = 0

    def close_cycles(free: int, acc):
        nonlocal total
        if free == 0:
            total += acc
            return
        start = (free & -free).bit_length() - 1
        walk(start, start, free & ~(1 << start), 1, acc)

    def walk(start: int, cur: int, free: int, length: int, acc):
        for j in nz[cur]:
            if j == start:
                if length % 2 == 0:
                    close_cycles(free, acc * m[cur][j])
            elif (free >> j) & 1:
                walk(start, j, free & ~(1 << j), length + 1, acc * m[cur][j])

    close_cycles((1 << n) - 1, 1)
    return total


def permanent_cycle_cover(a) -> int | Fraction:
    """Sum over spanning cycle covers of the weighted digraph of ``a``.

    Diagonal entries act as loops (cycles of length one).  The cover is
    built cycle by cycle through the lowest uncovered vertex, memoised on
    the uncovered set.
    """
    m = as_matrix(a)
    n = len(m)
    out_arcs = [[(j, m[i][j]) for j in range(n) if m[i][j] != 0] for i in range(n)]
    memo: dict[int, int | Fraction] = {0: 1}

    def cover(free: int):
        hit = memo.get(free)
        if hit is not None:
            return hit
        start = (free & -free).bit_length() - 1
        rest = free & ~(1 << start)
        total = 0
        # depth-first over directed paths from start inside `free`
        stack = [(start, rest, 1)]
        while stack:
            cur, avail, w = stack.pop()
            for j, x in out_arcs[cur]:
                if j == start:
                    sub = cover(avail)
                    if sub:
                        total += w * x * sub
                elif (avail >> j) & 1:
                    stack.append((j, avail & ~(1 << j), w * x))
        memo[free] = total
        return total

    return cover((1 << n) - 1)


def principal_submatrix(a: Sequence[Sequence], subset: Sequence[int]) -> list[list]:
    return [[a[i][j] for j in subset] for i in subset]


def perm_poly_direct(a) -> Poly:
    """``per(xI - A)`` from principal subpermanents.

    ``a_k = (-1)^k * sum_{|S|=k} per(A[S])`` with every inner permanent by
    Ryser; subsets are visited in colex (increasing bitmask) order.
    """
    m = as_matrix(a)
    n = len(m)
    sums = [0] * (n + 1)
    for mask in range(1 << n):
        subset = [i for i in range(n) if (mask >> i) & 1]
        sums[len(subset)] += permanent_ryser(principal_submatrix(m, subset))
    return Poly(tuple(Fraction((-1) ** k * s) for k, s in enumerate(sums)))
