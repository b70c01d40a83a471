"""Exact rank and determinant over the rationals."""

from __future__ import annotations

from fractions import Fraction


def rank(matrix) -> int:
    """Rank of a rational matrix by Gaussian elimination in exact arithmetic."""
    a = [[Fraction(x) for x in row] for row in matrix]
    if not a or not a[0]:
        return 0
    n_rows, n_cols = len(a), len(a[0])
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(r + 1, n_rows):
            if a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == n_rows:
            break
    return r


def det(matrix) -> Fraction:
    """Determinant of a square rational matrix."""
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    value = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        value *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return sign * value
