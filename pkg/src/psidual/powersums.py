"""Nested power sums S_m^(a)(n), by literal summation and by psi expansion."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .psi import psi_general, require_integer

__all__ = ["HyperSumQuery", "hyper_sum_brute", "hyper_sum_expansion"]


@dataclass(frozen=True)
class HyperSumQuery:
    a: int
    m: int
    n: int

    def __post_init__(self):
        if self.a < 0:
            raise ValueError("nesting order a must be >= 0")
        if self.m < 2:
            raise ValueError("power m must be >= 2")
        if self.n < 1:
            raise ValueError("upper limit n must be >= 1")


def hyper_sum_brute(q: HyperSumQuery) -> int:
    """a-fold nested sum of nu^m, nu running up to n; a = 0 gives n^m.

    Layer by layer: layer[i][nu] = sum_{mu <= nu} layer[i-1][mu], kept only
    for the current query.
    """
    layer = [nu**q.m for nu in range(1, q.n + 1)]
    for _ in range(q.a):
        acc = 0
        nxt = []
        for v in layer:
            acc += v
            nxt.append(acc)
        layer = nxt
    return layer[-1]


def hyper_sum_expansion(q: HyperSumQuery, c_table) -> int:
    """sum_{k=2..m} c_mk psi_k^(a)(n)."""
    row = c_table.row(q.m, kind="c")
    total = sum((c * psi_general(q.a, k, q.n) for k, c in enumerate(row, start=2)), Fraction(0))
    require_integer(total, f"expansion of S^({q.a})_{q.m}({q.n})")
    if total < 0:
        raise ArithmeticError(f"expansion of S^({q.a})_{q.m}({q.n}) is negative: {total}")
    return int(total)
