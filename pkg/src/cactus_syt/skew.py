"""Exact counts of standard skew tableaux via the Aitken determinant

    f(lam / mu) = m! * det[ 1 / (lam_i - mu_j - i + j)! ]

with 1/k! = 0 for k < 0 and m = |lam| - |mu|.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial


def _det(matrix: list[list[Fraction]]) -> Fraction:
    a = [row[:] for row in matrix]
    size = len(a)
    det = Fraction(1)
    for c in range(size):
        pivot = next((r for r in range(c, size) if a[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, size):
            f = a[r][c] * inv
            if f:
                for k in range(c, size):
                    a[r][k] -= f * a[c][k]
    return det


@lru_cache(maxsize=1 << 18)
def skew_syt_count(outer: tuple[int, ...], inner: tuple[int, ...] = ()) -> int:
    """Number of standard fillings of outer/inner (0 if inner is not inside outer)."""
    k = len(outer)
    if len(inner) > k or any(b > a for a, b in zip(outer, inner)):
        return 0
    mu = tuple(inner) + (0,) * (k - len(inner))
    m = sum(outer) - sum(mu)
    if m == 0:
        return 1
    mat = [[Fraction(1, factorial(d)) if (d := outer[i] - mu[j] - i + j) >= 0 else Fraction(0)
            for j in range(k)] for i in range(k)]
    val = factorial(m) * _det(mat)
    if val.denominator != 1:
        raise ArithmeticError("non-integral skew count")
    return int(val)
