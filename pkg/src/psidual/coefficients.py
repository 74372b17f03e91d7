"""The dual coefficient triangles.

``a`` expands psi_m(n) in monomials n^k, ``c`` expands n^m in psi_k(n); both
are indexed 2 <= k <= m.  Each triangle can be produced by two independent
routes so they can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

from .combinatorics import factorial, stirling1_unsigned, stirling2
from .linalg import solve_exact
from .psi import psi

__all__ = [
    "CoeffTriangle",
    "TableTooSmallError",
    "ROUTES",
    "a_closed",
    "a_recursion_row",
    "c_explicit",
    "c_solve_row",
    "orthogonality_residual",
    "build_triangle",
]

ROUTES = {
    "a": ("closed-form", "recursion"),
    "c": ("explicit", "solve"),
}

Row = Tuple[Fraction, ...]


class TableTooSmallError(ValueError):
    pass


@dataclass(frozen=True)
class CoeffTriangle:
    """Rows m = 2..max_m of a coefficient triangle.

    ``rows[m - 2][k - 2]`` holds the (m, k) entry.  The construction route is
    carried along for reporting but does not take part in equality.
    """

    kind: str
    rows: Tuple[Row, ...]
    route: str = field(default="", compare=False)

    @property
    def max_m(self) -> int:
        return len(self.rows) + 1

    def row(self, m: int, kind: str | None = None) -> Row:
        if kind is not None and kind != self.kind:
            raise ValueError(f"expected a {kind}-triangle, got {self.kind}")
        if m < 2:
            raise ValueError(f"rows start at m = 2, got {m}")
        if m > self.max_m:
            raise TableTooSmallError(f"row {m} requested from a triangle with max_m = {self.max_m}")
        return self.rows[m - 2]

    def __getitem__(self, mk: Tuple[int, int]) -> Fraction:
        m, k = mk
        if k < 2 or k > m:
            return Fraction(0)
        return self.row(m)[k - 2]

    def entries(self):
        for m, row in enumerate(self.rows, start=2):
            for k, value in enumerate(row, start=2):
                yield m, k, value

    def check_invariants(self) -> None:
        """Raise AssertionError if any structural invariant is broken."""
        for m, row in enumerate(self.rows, start=2):
            assert len(row) == m - 1, f"row {m} has {len(row)} entries"
            assert sum(row) == 1, f"row {m} sums to {sum(row)}"
            if self.kind == "c":
                for k, v in enumerate(row, start=2):
                    assert v.denominator == 1, f"c[{m},{k}] = {v} is not an integer"
            else:
                scale = factorial(m - 2)
                for k, v in enumerate(row, start=2):
                    assert (v * scale).denominator == 1, f"a[{m},{k}] * {m - 2}! is not an integer"

    def with_entry(self, m: int, k: int, value) -> "CoeffTriangle":
        """Copy with one entry replaced."""
        rows = [list(r) for r in self.rows]
        rows[m - 2][k - 2] = Fraction(value)
        return CoeffTriangle(self.kind, tuple(tuple(r) for r in rows), self.route)


def _check_index(m: int, k: int) -> None:
    if m < 2 or k < 2 or k > m:
        raise ValueError(f"index (m={m}, k={k}) outside 2 <= k <= m")


def a_closed(m: int, k: int) -> Fraction:
    _check_index(m, k)
    return Fraction(stirling1_unsigned(m - 1, k - 1) - stirling1_unsigned(m - 1, k), factorial(m - 2))


# a_{m,1} for every m >= 2: the closed form read at k = 1; the recursion needs it
A_BOUNDARY = Fraction(-1)


def a_recursion_row(m: int, prev_row: Sequence[Fraction]) -> Row:
    """Row m of the a-triangle from row m-1 via a_mk = a_{m-1,k} + a_{m-1,k-1}/(m-2).

    ``prev_row`` lists a_{m-1,k} for k = 1..m-1, i.e. row m-1 with the
    boundary value a_{m-1,1} = -1 prepended.
    """
    if m < 3:
        raise ValueError("the recursion produces rows m >= 3")
    if len(prev_row) != m - 1:
        raise ValueError(f"row {m - 1} with boundary must have {m - 1} entries, got {len(prev_row)}")
    prev = list(prev_row) + [Fraction(0)]  # a_{m-1,m} = 0
    return tuple(prev[k - 1] + prev[k - 2] / (m - 2) for k in range(2, m + 1))


def c_explicit(m: int, k: int) -> Fraction:
    """c_mk = (k-2)! sum_{l=2..m} S2(l-1, k-1) (-1)^(l-k)."""
    _check_index(m, k)
    total = 0
    for l in range(2, m + 1):
        s = stirling2(l - 1, k - 1)
        total += -s if (l - k) % 2 else s
    return Fraction(factorial(k - 2) * total)


def c_solve_row(m: int) -> Row:
    """Solve n^m = sum_k c_mk psi_k(n) on the nodes n = 2..m."""
    if m < 2:
        raise ValueError("c rows start at m = 2")
    nodes = range(2, m + 1)
    matrix = [[psi(k, n) for k in range(2, m + 1)] for n in nodes]
    rhs = [Fraction(n**m) for n in nodes]
    return tuple(solve_exact(matrix, rhs))


def orthogonality_residual(a_table: CoeffTriangle, c_table: CoeffTriangle, m: int, k: int) -> Fraction:
    """sum_{l=2..m} a_ml c_lk - delta_mk."""
    _check_index(m, k)
    a_row = a_table.row(m, kind="a")
    if c_table.max_m < m:
        raise TableTooSmallError(f"c-triangle too small for m = {m}")
    total = sum((a_row[l - 2] * c_table[l, k] for l in range(2, m + 1)), Fraction(0))
    return total - (1 if m == k else 0)


def build_triangle(kind: str, max_m: int, route: str | None = None) -> CoeffTriangle:
    if kind not in ROUTES:
        raise ValueError(f"unknown triangle kind {kind!r}")
    route = route or ROUTES[kind][0]
    if route not in ROUTES[kind]:
        raise ValueError(f"route {route!r} is not available for kind {kind!r}")
    if max_m < 2:
        raise ValueError("max_m must be >= 2")

    rows: List[Row] = []
    if route == "closed-form":
        rows = [tuple(a_closed(m, k) for k in range(2, m + 1)) for m in range(2, max_m + 1)]
    elif route == "recursion":
        rows = [(Fraction(1),)]
        for m in range(3, max_m + 1):
            rows.append(a_recursion_row(m, (A_BOUNDARY,) + rows[-1]))
    elif route == "explicit":
        rows = [tuple(c_explicit(m, k) for k in range(2, m + 1)) for m in range(2, max_m + 1)]
    else:
        rows = [c_solve_row(m) for m in range(2, max_m + 1)]

    tri = CoeffTriangle(kind, tuple(rows), route)
    tri.check_invariants()
    return tri
