"""Tests for truncated series and rational functions."""

import pytest

from stripcomb.errors import ZeroConstantTermError
from stripcomb.exactmath.poly import T, X
from stripcomb.exactmath.series import RatFunc, TruncSeries, ratfunc_series


def test_fibonacci_series():
    """Test the expansion of 1/(1-x-x^2)."""
    series = ratfunc_series(RatFunc(1, 1 - X - X**2), 7)
    assert list(series) == [1, 1, 2, 3, 5, 8, 13, 21]
    assert series.order == 7


def test_series_over_t():
    """Test a series whose coefficients are polynomials in t."""
    series = RatFunc(1, 1 - X - T * X**2).series(3)
    assert series[2] == 1 + T
    assert series[3] == 1 + 2 * T


def test_unit_constant_term_is_inverted():
    """Test that a denominator with constant term -1 is handled."""
    series = RatFunc(1, -1 + X).series(3)
    assert list(series) == [-1, -1, -1, -1]


def test_zero_constant_term_raises():
    """Test that x in the denominator cannot be expanded."""
    with pytest.raises(ZeroConstantTermError):
        ratfunc_series(RatFunc(1, X), 3)


def test_cross_multiplied_equality():
    """Test that equality of rational functions ignores common factors."""
    assert RatFunc(1 + X, 1 - X**2) == RatFunc(1, 1 - X)
    assert RatFunc(1, 1 - X) != RatFunc(1, 1 + X)


def test_specialization_and_truncation():
    """Test substituting t = 1 in a series and truncating it."""
    series = RatFunc(1, 1 - X - T * X**2).series(6).subs("t", 1)
    assert list(series) == [1, 1, 2, 3, 5, 8, 13]
    assert list(series.truncate(2)) == [1, 1, 2]
    assert isinstance(series, TruncSeries)
