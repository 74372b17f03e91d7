"""Exact Gaussian elimination over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence


class SingularMatrixError(ArithmeticError):
    pass


def solve_exact(matrix: Sequence[Sequence], rhs: Sequence) -> List[Fraction]:
    """Solve ``matrix @ x = rhs`` exactly.

    Pivots are chosen as the first nonzero entry of the column; magnitude is
    irrelevant in exact arithmetic.
    """
    n = len(matrix)
    if len(rhs) != n or any(len(row) != n for row in matrix):
        raise ValueError("solve_exact needs a square system")
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]

    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError(f"no pivot in column {col}")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        for r in range(col + 1, n):
            f = aug[r][col]
            if f:
                f /= p
                row_r, row_c = aug[r], aug[col]
                for j in range(col, n + 1):
                    row_r[j] -= f * row_c[j]

    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = aug[i][n] - sum(aug[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / aug[i][i]
    return x
