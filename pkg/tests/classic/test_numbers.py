"""Tests for Catalan, Narayana and Eulerian numbers."""

import pytest

from stripcomb.classic.numbers import catalan, eulerian, eulerian_row, narayana, r_poly, r_poly_narayana
from stripcomb.errors import ParameterRangeError
from stripcomb.exactmath.poly import X


def test_catalan():
    """Test the first Catalan numbers."""
    assert [catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]


@pytest.mark.parametrize("n", range(0, 9))
def test_narayana_rows_sum_to_catalan(n):
    """Test that each Narayana row sums to a Catalan number, including n = 0."""
    lo = 0 if n == 0 else 1
    assert sum(narayana(n, k) for k in range(lo, n + 1)) == catalan(n)


def test_narayana_row():
    """Test the fourth Narayana row."""
    assert [narayana(4, k) for k in range(1, 5)] == [1, 6, 6, 1]


def test_eulerian():
    """Test Eulerian rows."""
    assert eulerian_row(4) == (1, 11, 11, 1)
    assert eulerian_row(0) == (1,)
    assert eulerian(3, 1) == 4
    with pytest.raises(ParameterRangeError):
        eulerian(3, 3)


def test_r_poly():
    """Test r_1 and the agreement of both forms of r_j."""
    assert r_poly(1) == 1 + X + X**2
    assert r_poly(2) == 1 + 2 * X + 4 * X**2 + 2 * X**3 + X**4
    for j in range(9):
        assert r_poly(j) == r_poly_narayana(j)
