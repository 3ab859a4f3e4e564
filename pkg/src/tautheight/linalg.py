"""Fraction-free (Bareiss) elimination for exact rational linear systems.

Rational input is cleared to integers row by row, the augmented system is
triangularised with Bareiss' one-step division (every intermediate entry is
a minor of the original matrix, so the division is exact), and the solution
is recovered by back substitution over :class:`~fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


class SingularMatrixError(ArithmeticError):
    pass


def _integer_rows(rows):
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        scale = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * scale) for x in row])
    return out


def bareiss_triangularize(aug: list[list[int]], n: int) -> int:
    """Triangularise the first ``n`` columns of ``aug`` in place.

    Returns the sign of the row permutation applied.  After the call
    ``aug[n-1][n-1]`` equals ``sign * det`` of the leading ``n x n`` block.
    """
    sign = 1
    prev = 1
    width = len(aug[0]) if aug else 0
    for k in range(n):
        if aug[k][k] == 0:
            for i in range(k + 1, n):
                if aug[i][k] != 0:
                    aug[k], aug[i] = aug[i], aug[k]
                    sign = -sign
                    break
            else:
                raise SingularMatrixError("matrix is singular")
        pivot = aug[k]
        pk = pivot[k]
        for i in range(k + 1, n):
            row = aug[i]
            rik = row[k]
            for j in range(k + 1, width):
                row[j] = (pk * row[j] - rik * pivot[j]) // prev
            row[k] = 0
        prev = pk
    return sign


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    scales = []
    rows = []
    for row in matrix:
        row = [Fraction(x) for x in row]
        s = lcm(*(x.denominator for x in row))
        scales.append(s)
        rows.append([int(x * s) for x in row])
    try:
        sign = bareiss_triangularize(rows, n)
    except SingularMatrixError:
        return Fraction(0)
    det = Fraction(sign * rows[n - 1][n - 1])
    for s in scales:
        det /= s
    return det


def solve(matrix: Sequence[Sequence], rhs: Sequence[Sequence]) -> list[list[Fraction]]:
    """Solve ``matrix @ X = rhs`` exactly; ``rhs`` is a list of rows (n x m)."""
    n = len(matrix)
    if n == 0:
        return []
    if len(rhs) != n:
        raise ValueError("rhs has the wrong number of rows")
    m = len(rhs[0])
    aug = _integer_rows([list(a) + list(b) for a, b in zip(matrix, rhs)])
    bareiss_triangularize(aug, n)
    x: list[list[Fraction]] = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n - 1, -1, -1):
        row = aug[i]
        diag = row[i]
        for c in range(m):
            acc = Fraction(row[n + c])
            for j in range(i + 1, n):
                if row[j]:
                    acc -= row[j] * x[j][c]
            x[i][c] = acc / diag
    return x


def inverse(matrix: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(matrix)
    eye = [[int(i == j) for j in range(n)] for i in range(n)]
    return solve(matrix, eye)


def scaled_inverse(matrix: Sequence[Sequence[int]]) -> tuple[list[list[int]], int]:
    """Fraction-free Gauss-Jordan on an integer matrix.

    Returns ``(adj, d)`` with integer entries such that ``inverse = adj / d``;
    ``d`` is +-det(matrix).  No rational arithmetic is performed.
    """
    n = len(matrix)
    if n == 0:
        return [], 1
    aug = [[int(x) for x in row] + [int(i == j) for j in range(n)] for i, row in enumerate(matrix)]
    width = 2 * n
    prev = 1
    for k in range(n):
        if aug[k][k] == 0:
            for i in range(k + 1, n):
                if aug[i][k] != 0:
                    aug[k], aug[i] = aug[i], aug[k]
                    break
            else:
                raise SingularMatrixError("matrix is singular")
        pivot = aug[k]
        pk = pivot[k]
        for i in range(n):
            if i == k:
                continue
            row = aug[i]
            rik = row[k]
            if rik == 0:
                if pk != prev:
                    for j in range(width):
                        row[j] = pk * row[j] // prev
                continue
            for j in range(width):
                row[j] = (pk * row[j] - rik * pivot[j]) // prev
        prev = pk
    d = aug[n - 1][n - 1]
    return [row[n:] for row in aug], d
