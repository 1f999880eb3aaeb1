"""Tests for recurrence guessing."""

import pytest

from stripcomb.errors import InsufficientDataError
from stripcomb.exactmath.poly import T, X
from stripcomb.formulas import a_count, a_poly
from stripcomb.genfun.guess import characteristic_poly, guess_cfinite, guess_denominator_check


def test_fibonacci():
    """Test the defining recurrence of the Fibonacci numbers."""
    fib = [1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144]
    fit = guess_cfinite(fib, 4)
    assert fit.order == 2
    assert fit.coefficients == (-1, -1)
    assert characteristic_poly(fit) == 1 - X - X**2


def test_offset_recurrence():
    """Test a(n+2,4) = 3 a(n,4) from n = 1."""
    seq = [a_count(n, 4) for n in range(16)]
    fit = guess_cfinite(seq, 3, 1)
    assert fit.order == 2
    assert characteristic_poly(fit) == 1 - 3 * X**2


def test_weighted_sequence():
    """Test a recurrence over Z[t]."""
    seq = [a_poly(n, 3) for n in range(12)]
    fit = guess_cfinite(seq, 3)
    assert fit.order == 2
    assert characteristic_poly(fit) == 1 - X - T * X**2


def test_no_fit():
    """Test that a non-recurrent prefix gives None."""
    cubes_plus_powers = [n**3 + 2**n for n in range(12)]
    assert guess_cfinite(cubes_plus_powers, 2) is None


def test_insufficient_data():
    """Test that too short a prefix raises."""
    with pytest.raises(InsufficientDataError):
        guess_cfinite([1, 1, 2, 3, 5], 2)


def test_guessed_denominators():
    """Test that guessed recurrences divide the known denominators."""
    assert guess_denominator_check(k_max=3).passed
