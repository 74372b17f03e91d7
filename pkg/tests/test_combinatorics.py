import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from psidual.combinatorics import (
    StirlingTriangle,
    binomial_sym,
    factorial,
    rising_factorial,
    stirling1_unsigned,
    stirling2,
)


def cycle_count(perm):
    seen, cycles = set(), 0
    for start in range(len(perm)):
        if start in seen:
            continue
        cycles += 1
        j = start
        while j not in seen:
            seen.add(j)
            j = perm[j]
    return cycles


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]


@pytest.mark.parametrize("n, expected", [(0, 1), (5, 120), (10, 3628800)])
def test_factorial_examples(n, expected):
    assert factorial(n) == expected


def test_factorial_large():
    assert factorial(100) == math.prod(range(1, 101))


@pytest.mark.parametrize("a, b, expected", [(0, 0, 1), (1, 4, 5), (2, 3, 10)])
def test_binomial_sym_examples(a, b, expected):
    assert binomial_sym(a, b) == expected


def test_binomial_sym_matches_factorial_quotient():
    for a in range(41):
        for b in range(41):
            assert binomial_sym(a, b) == factorial(a + b) // (factorial(a) * factorial(b))
            assert binomial_sym(a, b) == binomial_sym(b, a)


@pytest.mark.parametrize("n, k, expected", [(7, 0, 1), (3, 2, 12), (2, 3, 24)])
def test_rising_factorial_examples(n, k, expected):
    assert rising_factorial(n, k) == expected


def test_rising_factorial_binomial_link():
    for n in range(1, 21):
        for k in range(1, 21):
            assert rising_factorial(n, k - 1) == factorial(k - 1) * binomial_sym(n - 1, k - 1)
        for k in range(2, 21):
            assert (k - 1) * binomial_sym(n - 1, k - 1) == Fraction(rising_factorial(n, k - 1), factorial(k - 2))


def test_stirling1_examples():
    assert stirling1_unsigned(0, 0) == 1
    assert all(stirling1_unsigned(n, 0) == 0 for n in range(1, 10))
    assert stirling1_unsigned(3, 2) == 3
    assert stirling1_unsigned(3, 5) == 0
    assert stirling1_unsigned(3, -1) == 0


def test_stirling2_examples():
    assert all(stirling2(n, n) == 1 for n in range(20))
    assert stirling2(1, 2) == 0
    assert stirling2(4, 2) == 7


@pytest.mark.parametrize("n", range(0, 8))
def test_stirling1_counts_permutations_by_cycles(n):
    counts = [0] * (n + 1)
    for perm in itertools.permutations(range(n)):
        counts[cycle_count(perm)] += 1
    assert [stirling1_unsigned(n, k) for k in range(n + 1)] == counts


@pytest.mark.parametrize("n", range(0, 8))
def test_stirling2_counts_set_partitions(n):
    counts = [0] * (n + 1)
    for part in set_partitions(list(range(n))):
        counts[len(part)] += 1
    assert [stirling2(n, k) for k in range(n + 1)] == counts


def test_stirling1_row_sums_are_factorials():
    for n in range(16):
        assert sum(stirling1_unsigned(n, k) for k in range(n + 1)) == factorial(n)


def test_power_in_rising_factorials():
    for n in range(11):
        for x in range(1, 11):
            total = sum(stirling2(n, k) * (-1) ** (n - k) * rising_factorial(x, k) for k in range(n + 1))
            assert total == x**n


def test_triangle_shape_and_bounds():
    tri = StirlingTriangle.build("second", 6)
    assert tri.rows[0] == (1,)
    assert [len(r) for r in tri.rows] == list(range(1, 8))
    assert tri(3, 7) == 0
    with pytest.raises(IndexError):
        tri(7, 2)
    with pytest.raises(ValueError):
        StirlingTriangle.build("third", 3)


@given(st.integers(0, 60), st.integers(0, 60))
def test_stirling_recurrences(n, k):
    n += 1
    assert stirling1_unsigned(n, k) == (n - 1) * stirling1_unsigned(n - 1, k) + stirling1_unsigned(n - 1, k - 1)
    assert stirling2(n, k) == k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)
