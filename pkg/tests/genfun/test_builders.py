"""Tests for the rational generating functions."""

import pytest

from stripcomb.classic.families import fib_at
from stripcomb.errors import ParameterRangeError
from stripcomb.exactmath.poly import T, X, subs
from stripcomb.exactmath.series import RatFunc
from stripcomb.genfun.builders import (
    continued_fraction_gf,
    corridor_cd,
    corridor_series_check,
    decomposition_gf,
    dyck_gf,
    dyck_series_check,
    gf_corridor_t,
    gf_numbers,
    gf_weighted,
    numbers_series_check,
    rational_identities_check,
    weighted_series_check,
)


def prefix(named, count):
    series = named.series(count - 1)
    return [series[n] for n in range(count)]


def test_numbers_closed_forms():
    """Test the strip-4 quotient and the Fibonacci strip."""
    assert gf_numbers(4).ratfunc == RatFunc(1 + X - X**2, 1 - 3 * X**2)
    assert prefix(gf_numbers(3), 7) == [1, 1, 2, 3, 5, 8, 13]
    assert prefix(gf_numbers(0), 4) == [1, 0, 0, 0]


def test_weighted_closed_forms():
    """Test the weighted generating functions of the narrow strips."""
    assert gf_weighted(3).ratfunc == RatFunc(1, 1 - X - T * X**2)
    assert gf_weighted(2).ratfunc == RatFunc(1 + X, 1 - (1 + T) * X**2)
    expected = RatFunc(1 + X - T * X**2, 1 - X**2 - 2 * T * X**2 - T * X**4 + T**2 * X**4)
    assert gf_weighted(4).ratfunc == expected
    assert prefix(gf_weighted(3), 5) == [1, 1, 1 + T, 1 + 2 * T, 1 + 3 * T + T**2]
    with pytest.raises(ParameterRangeError):
        gf_weighted(0)


def test_corridor_generating_function():
    """Test the bounded corridor series and its t = 1 denominator."""
    assert [subs(c, "t", 1) for c in prefix(gf_corridor_t(1), 6)] == [1, 1, 2, 3, 5, 8]
    assert subs(corridor_cd(2)[1], "t", 1) == fib_at(4) - X * fib_at(3)


def test_dyck_generating_function():
    """Test Dyck paths of height at most 3."""
    assert prefix(dyck_gf(3), 9) == [1, 0, 1, 0, 2, 0, 5, 0, 13]


def test_continued_fractions():
    """Test both continued fraction flavors against their closed forms."""
    for depth in range(6):
        assert continued_fraction_gf(depth, "dyck").ratfunc == dyck_gf(depth).ratfunc
        assert continued_fraction_gf(depth, "odd").ratfunc == gf_numbers(2 * depth + 1).ratfunc
    with pytest.raises(ParameterRangeError):
        continued_fraction_gf(2, "even")


def test_decomposition():
    """Test the first-return decomposition against the counts."""
    for k in range(1, 6):
        assert decomposition_gf(k).ratfunc == gf_numbers(k).ratfunc


@pytest.mark.parametrize(
    "check",
    [
        lambda: numbers_series_check(5, order=20),
        lambda: weighted_series_check(5, order=14),
        lambda: corridor_series_check(3, order=12),
        lambda: dyck_series_check(4, order=16),
        lambda: rational_identities_check(k_max=3),
    ],
)
def test_series_checks_pass(check):
    """Test the generating functions against their oracles."""
    report = check()
    assert report.passed, report.witness
