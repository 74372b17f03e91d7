"""The basis polynomials psi_m(n) and their nested-sum generalization."""

from __future__ import annotations

from fractions import Fraction

from .combinatorics import binomial_sym

__all__ = ["psi", "psi_general", "psi_via_a_table", "symmetry_residual", "require_integer"]


def require_integer(value: Fraction, what: str) -> Fraction:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {value}")
    return value


def psi(m: int, n: int) -> Fraction:
    """psi_m(n) = n + (m-1)(n-1) B(n-1, m-1); psi_0 and psi_1 are the identity."""
    if m < 0:
        raise ValueError("psi needs m >= 0")
    if n < 1:
        raise ValueError("psi is defined for n >= 1")
    if m < 2:
        return Fraction(n)
    return Fraction(n + (m - 1) * (n - 1) * binomial_sym(n - 1, m - 1))


def psi_general(a: int, m: int, n: int) -> Fraction:
    """psi_m^(a)(n) = B(a+1, n-1) + m(m-1)/(m+a) (n-1) B(m+a-1, n-1).

    The result is checked to be an integer.
    """
    if a < 0:
        raise ValueError("psi_general needs a >= 0")
    if m < 2:
        raise ValueError("psi_general is only defined for m >= 2")
    if n < 1:
        raise ValueError("psi_general is defined for n >= 1")
    value = binomial_sym(a + 1, n - 1) + Fraction(m * (m - 1), m + a) * (n - 1) * binomial_sym(
        m + a - 1, n - 1
    )
    return require_integer(value, f"psi_general({a}, {m}, {n})")


def psi_via_a_table(m: int, n: int, table) -> Fraction:
    """Evaluate psi_m(n) through its monomial expansion sum_k a_mk n^k."""
    if m < 2:
        raise ValueError("monomial expansion starts at m = 2")
    row = table.row(m, kind="a")
    return sum((coef * n**k for k, coef in enumerate(row, start=2)), Fraction(0))


def _psi_polynomial(m: int, n: int) -> Fraction:
    # psi_m has no constant term, so its polynomial value at n = 0 is 0
    if n == 0 and m >= 0:
        return Fraction(0)
    return psi(m, n)


def symmetry_residual(m: int, n: int) -> Fraction:
    """(psi_m(n) - n) - (psi_n(m) - m); zero for every admissible pair.

    Either argument may be 0, in which case the polynomial value at 0 is used
    for the swapped term.
    """
    return (_psi_polynomial(m, n) - n) - (_psi_polynomial(n, m) - m)
