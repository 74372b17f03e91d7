"""Weighted sums over the coefficient triangles and exact identity checks.

Every check returns an :class:`IdentityReport` carrying both sides of the
equation, so a failure can be inspected instead of just counted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .coefficients import CoeffTriangle, TableTooSmallError, build_triangle, orthogonality_residual
from .combinatorics import binomial_sym, factorial, rising_factorial
from .psi import psi, require_integer

__all__ = [
    "IdentityReport",
    "Triple",
    "T",
    "U",
    "check_row_sums",
    "check_orthogonality",
    "check_weighted_sums",
    "check_rising_factorial",
    "check_printed_weighted_binomial",
    "check_exchange",
    "check_mersenne_family",
    "check_power_expansion",
    "check_constant_pull_in",
    "pythagoras_residual",
    "mersenne_footnote_residual",
    "check_pythagoras",
    "enumerate_pythagorean",
    "Bounds",
    "IDENTITIES",
    "run_verification",
]


@dataclass(frozen=True)
class IdentityReport:
    identity_name: str
    parameter_point: Tuple[int, ...]
    lhs: Fraction
    rhs: Fraction

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True, order=True)
class Triple:
    A: int
    B: int
    C: int

    def __post_init__(self):
        if min(self.A, self.B, self.C) < 1:
            raise ValueError("triple members must be >= 1")

    @property
    def is_pythagorean(self) -> bool:
        return self.A**2 + self.B**2 == self.C**2


def _default(table: Optional[CoeffTriangle], kind: str, m: int) -> CoeffTriangle:
    if table is None:
        return build_triangle(kind, max(m, 2))
    if table.kind != kind:
        raise ValueError(f"expected a {kind}-triangle, got {table.kind}")
    if table.max_m < m:
        raise TableTooSmallError(f"{kind}-triangle has max_m = {table.max_m}, need {m}")
    return table


def T(m: int, alpha: int, c_table: Optional[CoeffTriangle] = None) -> Fraction:
    """sum_{k=2..m} c_mk k^alpha."""
    if m < 2 or alpha < 0:
        raise ValueError("T needs m >= 2 and alpha >= 0")
    row = _default(c_table, "c", m).row(m)
    value = sum((c * k**alpha for k, c in enumerate(row, start=2)), Fraction(0))
    return require_integer(value, f"T({m}, {alpha})")


def U(m: int, alpha: int, a_table: Optional[CoeffTriangle] = None) -> Fraction:
    """sum_{k=2..m} a_mk psi_alpha(k), with psi_0 and psi_1 the identity."""
    if m < 2 or alpha < 0:
        raise ValueError("U needs m >= 2 and alpha >= 0")
    row = _default(a_table, "a", m).row(m)
    return sum((a * psi(alpha, k) for k, a in enumerate(row, start=2)), Fraction(0))


def check_row_sums(m_max: int, a_table=None, c_table=None) -> List[IdentityReport]:
    a_table = _default(a_table, "a", m_max)
    c_table = _default(c_table, "c", m_max)
    out = []
    for m in range(2, m_max + 1):
        out.append(IdentityReport("row-sum-a", (m,), sum(a_table.row(m), Fraction(0)), Fraction(1)))
        out.append(IdentityReport("row-sum-c", (m,), sum(c_table.row(m), Fraction(0)), Fraction(1)))
    return out


def check_orthogonality(m_max: int, a_table=None, c_table=None) -> List[IdentityReport]:
    a_table = _default(a_table, "a", m_max)
    c_table = _default(c_table, "c", m_max)
    out = []
    for m in range(2, m_max + 1):
        for k in range(2, m + 1):
            delta = Fraction(1 if m == k else 0)
            lhs = orthogonality_residual(a_table, c_table, m, k) + delta
            out.append(IdentityReport("orthogonality", (m, k), lhs, delta))
    return out


def check_weighted_sums(m_max: int, a_table=None, c_table=None) -> List[IdentityReport]:
    """T(m, 1) = m and U(m, 1) = m for 2 <= m <= m_max."""
    a_table = _default(a_table, "a", m_max)
    c_table = _default(c_table, "c", m_max)
    out = []
    for m in range(2, m_max + 1):
        out.append(IdentityReport("weighted-sum-c", (m,), T(m, 1, c_table), Fraction(m)))
        out.append(IdentityReport("weighted-sum-a", (m,), U(m, 1, a_table), Fraction(m)))
    return out


def check_rising_factorial(m: int, n: int, c_table=None) -> IdentityReport:
    """sum_k c_mk n^(k-1 rising) / (k-2)! = (n^m - n) / (n - 1)."""
    if m < 2 or n < 2:
        raise ValueError("rising-factorial identity needs m >= 2 and n >= 2")
    row = _default(c_table, "c", m).row(m)
    lhs = sum(
        (c * Fraction(rising_factorial(n, k - 1), factorial(k - 2)) for k, c in enumerate(row, start=2)),
        Fraction(0),
    )
    return IdentityReport("rising-factorial", (m, n), lhs, Fraction(n**m - n, n - 1))


def check_printed_weighted_binomial(m: int, n: int, c_table=None) -> IdentityReport:
    """sum_k c_mk B(k-1, n-1) = (n^(m-1) - n) / (n - 1), exactly as typeset.

    This form is known to fail (e.g. at m = 3, n = 2); it is kept so that the
    failure stays documented and reproducible.
    """
    if m < 2 or n < 2:
        raise ValueError("needs m >= 2 and n >= 2")
    row = _default(c_table, "c", m).row(m)
    lhs = sum((c * binomial_sym(k - 1, n - 1) for k, c in enumerate(row, start=2)), Fraction(0))
    return IdentityReport("printed-weighted-binomial", (m, n), lhs, Fraction(n ** (m - 1) - n, n - 1))


def check_exchange(m: int, alpha: int, c_table=None) -> IdentityReport:
    """T(m, alpha) - m = T(alpha, m) - alpha."""
    if m < 2 or alpha < 2:
        raise ValueError("exchange relation needs m, alpha >= 2")
    c_table = _default(c_table, "c", max(m, alpha))
    return IdentityReport("exchange", (m, alpha), T(m, alpha, c_table) - m, T(alpha, m, c_table) - alpha)


def check_mersenne_family(m_max: int, c_table=None) -> List[IdentityReport]:
    c_table = _default(c_table, "c", m_max)
    out = []
    for m in range(2, m_max + 1):
        out.append(IdentityReport("mersenne-2", (m,), T(m, 2, c_table) - m, Fraction(2**m - 2)))
        out.append(IdentityReport("mersenne-3", (m,), T(m, 3, c_table) - m, Fraction(3**m - 3)))
    return out


def check_power_expansion(m: int, n: int, a_table=None, c_table=None) -> IdentityReport:
    """n^m - n + m = sum_{l=2..n} a_nl T(m, l)."""
    if m < 2 or n < 2:
        raise ValueError("power expansion needs m, n >= 2")
    a_row = _default(a_table, "a", n).row(n)
    c_table = _default(c_table, "c", m)
    rhs = sum((a * T(m, l, c_table) for l, a in enumerate(a_row, start=2)), Fraction(0))
    return IdentityReport("power-expansion", (m, n), Fraction(n**m - n + m), rhs)


def check_constant_pull_in(table: CoeffTriangle, m: int, const, seq: Callable[[int], object]) -> IdentityReport:
    """sum_k w_mk A_k - C = sum_k w_mk (A_k - C) for either triangle."""
    row = table.row(m)
    const = Fraction(const)
    values = [Fraction(seq(k)) for k in range(2, m + 1)]
    lhs = sum((w * v for w, v in zip(row, values)), Fraction(0)) - const
    rhs = sum((w * (v - const) for w, v in zip(row, values)), Fraction(0))
    return IdentityReport(f"constant-pull-in-{table.kind}", (m,), lhs, rhs)


def _pythagoras_sides(t: Triple, a_table, weight: Callable[[int], Fraction]) -> Fraction:
    if min(t.A, t.B, t.C) < 2:
        raise ValueError("triple members must be >= 2; a-rows start at m = 2")
    top = max(t.A, t.B, t.C)
    a_table = _default(a_table, "a", top)
    zero = Fraction(0)
    # rows padded with zeros up to l = top
    ra, rb, rc = (a_table.row(x) + (zero,) * (top - x) for x in (t.A, t.B, t.C))
    return sum((weight(l) * (ra[i] + rb[i] - rc[i]) for i, l in enumerate(range(2, top + 1))), zero)


def pythagoras_residual(t: Triple, a_table=None) -> Fraction:
    """sum_l 2^l (a_Al + a_Bl - a_Cl) - (2 + C - A - B); equals A^2 + B^2 - C^2."""
    lhs = _pythagoras_sides(t, a_table, lambda l: Fraction(2**l))
    return lhs - (2 + t.C - t.A - t.B)


def mersenne_footnote_residual(t: Triple, a_table=None) -> Fraction:
    """sum_l (2^(l-1) - 1)(a_Al + a_Bl - a_Cl) - (C - A - B)/2; equals (A^2 + B^2 - C^2)/2."""
    lhs = _pythagoras_sides(t, a_table, lambda l: Fraction(2 ** (l - 1) - 1))
    return lhs - Fraction(t.C - t.A - t.B, 2)


def check_pythagoras(t: Triple, a_table=None) -> List[IdentityReport]:
    """Both power-of-two forms of A^2 + B^2 = C^2 at one triple."""
    point = (t.A, t.B, t.C)
    binary = _pythagoras_sides(t, a_table, lambda l: Fraction(2**l))
    mersenne = _pythagoras_sides(t, a_table, lambda l: Fraction(2 ** (l - 1) - 1))
    return [
        IdentityReport("pythagoras", point, binary, Fraction(2 + t.C - t.A - t.B)),
        IdentityReport("pythagoras-footnote", point, mersenne, Fraction(t.C - t.A - t.B, 2)),
    ]


def enumerate_pythagorean(c_max: int) -> List[Triple]:
    """All A <= B < C <= c_max with A^2 + B^2 = C^2, ordered by (C, B, A)."""
    out = []
    for C in range(1, c_max + 1):
        for A in range(1, C):
            rest = C * C - A * A
            B = isqrt(rest)
            if B >= A and B * B == rest:
                out.append(Triple(A, B, C))
    out.sort(key=lambda t: (t.C, t.B, t.A))
    return out


@dataclass(frozen=True)
class Bounds:
    max_m: int = 20
    max_alpha: int = 15
    max_n: int = 12
    max_c: int = 50


def _sweep_row_sums(b, a, c):
    return check_row_sums(b.max_m, a, c)


def _sweep_weighted(b, a, c):
    return check_weighted_sums(b.max_m, a, c)


def _sweep_orthogonality(b, a, c):
    return check_orthogonality(b.max_m, a, c)


def _sweep_rising(b, a, c):
    return [check_rising_factorial(m, n, c) for m in range(2, b.max_m + 1) for n in range(2, b.max_n + 1)]


def _sweep_exchange(b, a, c):
    return [check_exchange(m, al, c) for m in range(2, b.max_m + 1) for al in range(2, b.max_alpha + 1)]


def _sweep_mersenne(b, a, c):
    return check_mersenne_family(b.max_m, c)


def _sweep_power(b, a, c):
    return [check_power_expansion(m, n, a, c) for m in range(2, b.max_m + 1) for n in range(2, b.max_n + 1)]


def _sweep_pythagoras(b, a, c):
    return [r for t in enumerate_pythagorean(b.max_c) for r in check_pythagoras(t, a)]


IDENTITIES: Dict[str, Callable] = {
    "row-sums": _sweep_row_sums,
    "weighted-sums": _sweep_weighted,
    "orthogonality": _sweep_orthogonality,
    "rising-factorial": _sweep_rising,
    "exchange": _sweep_exchange,
    "mersenne": _sweep_mersenne,
    "power-expansion": _sweep_power,
    "pythagoras": _sweep_pythagoras,
}


def run_verification(
    names: Sequence[str],
    bounds: Bounds = Bounds(),
    a_table: Optional[CoeffTriangle] = None,
    c_table: Optional[CoeffTriangle] = None,
) -> Dict[str, List[IdentityReport]]:
    """Run the named sweeps; reports within a sweep are sorted by parameter point."""
    need = max(bounds.max_m, bounds.max_alpha, bounds.max_n, bounds.max_c, 2)
    a_table = a_table or build_triangle("a", need)
    c_table = c_table or build_triangle("c", need)
    results = {}
    for name in names:
        reports = IDENTITIES[name](bounds, a_table, c_table)
        results[name] = sorted(reports, key=lambda r: (r.parameter_point, r.identity_name))
    return results
