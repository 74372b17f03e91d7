import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from psidual.coefficients import TableTooSmallError, build_triangle
from psidual.identities import (
    IDENTITIES,
    Bounds,
    Triple,
    T,
    U,
    check_constant_pull_in,
    check_exchange,
    check_mersenne_family,
    check_power_expansion,
    check_printed_weighted_binomial,
    check_rising_factorial,
    check_weighted_sums,
    enumerate_pythagorean,
    mersenne_footnote_residual,
    pythagoras_residual,
    run_verification,
)
from psidual.psi import psi

A = build_triangle("a", 40)
C = build_triangle("c", 60)


def brute_triples(c_max):
    return [
        (a, b, c)
        for c in range(1, c_max + 1)
        for b in range(1, c)
        for a in range(1, b + 1)
        if a * a + b * b == c * c
    ]


def test_T_examples():
    assert all(T(m, 0, C) == 1 for m in range(2, 41))
    assert T(5, 1, C) == 5
    assert T(5, 2, C) == 35


def test_T_without_table():
    assert T(5, 3) == 245


def test_U_examples():
    assert U(4, 1, A) == 4
    assert U(2, 3, A) == psi(3, 2) == 8


def test_U_alpha_zero_equals_alpha_one():
    # extension only: psi_0 is the identity, so U(m, 0) = U(m, 1)
    assert all(U(m, 0, A) == U(m, 1, A) == m for m in range(2, 41))


def test_T_table_too_small():
    with pytest.raises(TableTooSmallError):
        T(61, 2, C)
    with pytest.raises(ValueError):
        T(3, 2, A)


def test_weighted_sums():
    reports = check_weighted_sums(40, A, C)
    assert len(reports) == 78 and all(r.passed for r in reports)
    m5 = [r for r in reports if r.parameter_point == (5,) and r.identity_name == "weighted-sum-c"][0]
    assert m5.lhs == m5.rhs == 5


@pytest.mark.parametrize("m, n, value", [(2, 5, 5), (4, 2, 14), (5, 3, 120)])
def test_rising_factorial_examples(m, n, value):
    r = check_rising_factorial(m, n, C)
    assert r.lhs == r.rhs == value


def test_rising_factorial_grid():
    assert all(check_rising_factorial(m, n, C).passed for m in range(2, 26) for n in range(2, 16))


def test_printed_weighted_binomial_fails_where_expected():
    r = check_printed_weighted_binomial(3, 2, C)
    assert (r.lhs, r.rhs, r.passed) == (3, 2, False)


@pytest.mark.parametrize("m, alpha, side", [(7, 7, 0), (5, 2, 30), (4, 3, 78)])
def test_exchange_examples(m, alpha, side):
    r = check_exchange(m, alpha, C)
    assert r.passed
    if side:
        assert r.lhs == side


def test_exchange_grid():
    assert all(check_exchange(m, al, C).passed for m in range(2, 26) for al in range(2, 26))


def test_mersenne_family():
    reports = check_mersenne_family(60, C)
    assert len(reports) == 118 and all(r.passed for r in reports)
    assert T(5, 3, C) - 5 == 240


def test_power_expansion_examples():
    assert check_power_expansion(2, 3, A, C).lhs == 8
    assert check_power_expansion(3, 4, A, C).rhs == 63
    for n in range(2, 30):
        assert sum(2**l * a for l, a in enumerate(A.row(n), start=2)) == n * n - n + 2


def test_power_expansion_grid():
    assert all(check_power_expansion(m, n, A, C).passed for m in range(2, 21) for n in range(2, 21))


@given(st.integers(-5, 5), st.integers(2, 15), st.sampled_from(["a", "c"]))
def test_constant_pull_in(const, m, kind):
    table = A if kind == "a" else C
    assert check_constant_pull_in(table, m, const, lambda k: k * k).passed


def test_constant_pull_in_random_sequence():
    rng = random.Random(7)
    seq = {k: Fraction(rng.randint(-100, 100), rng.randint(1, 9)) for k in range(2, 16)}
    for m in range(2, 16):
        assert check_constant_pull_in(A, m, Fraction(3, 4), seq.__getitem__).passed
        assert check_constant_pull_in(C, m, -2, seq.__getitem__).passed


@pytest.mark.parametrize("t, res", [((3, 4, 5), 0), ((2, 2, 2), 4), ((5, 12, 13), 0)])
def test_pythagoras_examples(t, res):
    assert pythagoras_residual(Triple(*t), A) == res


@pytest.mark.parametrize("t, res", [((3, 4, 5), 0), ((2, 2, 2), 2), ((6, 8, 10), 0)])
def test_footnote_examples(t, res):
    assert mersenne_footnote_residual(Triple(*t), A) == res


@given(st.integers(2, 30), st.integers(2, 30), st.integers(2, 30))
def test_pythagoras_residual_is_sum_of_squares(a, b, c):
    t = Triple(a, b, c)
    assert pythagoras_residual(t, A) == a * a + b * b - c * c
    assert mersenne_footnote_residual(t, A) == Fraction(a * a + b * b - c * c, 2)


def test_pythagoras_rejects_small_members():
    with pytest.raises(ValueError):
        pythagoras_residual(Triple(1, 2, 2), A)
    with pytest.raises(ValueError):
        Triple(0, 3, 3)


@pytest.mark.parametrize("c_max, expected", [(4, []), (5, [(3, 4, 5)]), (13, [(3, 4, 5), (6, 8, 10), (5, 12, 13)])])
def test_enumerate_examples(c_max, expected):
    assert [(t.A, t.B, t.C) for t in enumerate_pythagorean(c_max)] == expected


def test_enumerate_matches_brute_force():
    triples = enumerate_pythagorean(100)
    assert sorted((t.A, t.B, t.C) for t in triples) == sorted(brute_triples(100))
    keys = [(t.C, t.B, t.A) for t in triples]
    assert keys == sorted(keys)
    assert all(t.is_pythagorean for t in triples)


def test_run_verification_small_bounds():
    results = run_verification(list(IDENTITIES), Bounds(6, 5, 5, 13))
    assert set(results) == set(IDENTITIES)
    assert all(r.passed for rs in results.values() for r in rs)
    assert len(results["mersenne"]) == 10
    assert len(results["pythagoras"]) == 6


def test_run_verification_detects_corruption():
    bad = build_triangle("c", 20)
    bad = bad.with_entry(6, 4, bad[6, 4] + 1)
    results = run_verification(["exchange", "mersenne"], Bounds(10, 8, 5, 5), c_table=bad)
    assert not all(r.passed for rs in results.values() for r in rs)
