"""Exact integer combinatorics: factorials, binomials, rising factorials and
memoized Stirling triangles of both kinds."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

__all__ = [
    "factorial",
    "binomial_sym",
    "rising_factorial",
    "StirlingTriangle",
    "stirling_triangle",
    "stirling1_unsigned",
    "stirling2",
]

FIRST_UNSIGNED = "first-unsigned"
SECOND = "second"


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    r = 1
    for i in range(2, n + 1):
        r *= i
    return r


def binomial_sym(a: int, b: int) -> int:
    """(a+b)! / (a! b!), by the multiplicative formula over the smaller index."""
    if a < 0 or b < 0:
        raise ValueError("binomial_sym needs nonnegative indices")
    small, big = (a, b) if a <= b else (b, a)
    r = 1
    for i in range(1, small + 1):
        # r stays integral: it is binomial(big + i, i) after this step
        r = r * (big + i) // i
    return r


def rising_factorial(n: int, k: int) -> int:
    """n (n+1) ... (n+k-1); the empty product for k = 0."""
    if k < 0:
        raise ValueError("rising_factorial needs k >= 0")
    r = 1
    for j in range(k):
        r *= n + j
    return r


@dataclass(frozen=True)
class StirlingTriangle:
    """Rows 0..max_n of a Stirling triangle; row n holds k = 0..n.

    Entries outside 0 <= k <= n read as 0.
    """

    kind: str
    rows: Tuple[Tuple[int, ...], ...]

    @property
    def max_n(self) -> int:
        return len(self.rows) - 1

    def __call__(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        if n > self.max_n:
            raise IndexError(f"row {n} beyond triangle of size {self.max_n}")
        return self.rows[n][k]

    @classmethod
    def build(cls, kind: str, max_n: int) -> "StirlingTriangle":
        if kind not in (FIRST_UNSIGNED, SECOND):
            raise ValueError(f"unknown Stirling kind {kind!r}")
        if max_n < 0:
            raise ValueError("max_n must be >= 0")
        rows = [(1,)]
        for n in range(1, max_n + 1):
            prev = rows[-1]
            row = [0] * (n + 1)
            for k in range(1, n + 1):
                left = prev[k - 1]
                same = prev[k] if k < n else 0
                # [n k] = (n-1)[n-1 k] + [n-1 k-1];  {n k} = k{n-1 k} + {n-1 k-1}
                mult = n - 1 if kind == FIRST_UNSIGNED else k
                row[k] = mult * same + left
            rows.append(tuple(row))
        return cls(kind, tuple(rows))


_cache = {}


def stirling_triangle(kind: str, max_n: int) -> StirlingTriangle:
    """Shared triangle covering at least rows 0..max_n.

    Grows by doubling so repeated lookups stay cheap; a built triangle is
    never mutated, only replaced by a larger one.
    """
    tri = _cache.get(kind)
    if tri is None or tri.max_n < max_n:
        size = max(max_n, 2 * tri.max_n if tri is not None else 16)
        tri = StirlingTriangle.build(kind, size)
        _cache[kind] = tri
    return tri


def stirling1_unsigned(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return stirling_triangle(FIRST_UNSIGNED, n)(n, k)


def stirling2(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return stirling_triangle(SECOND, n)(n, k)
