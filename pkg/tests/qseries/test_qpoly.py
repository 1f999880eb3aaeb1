"""Tests for q-integers, q-binomials, q-Pochhammer symbols and the q-derivative."""

import pytest

from stripcomb.errors import ParameterRangeError
from stripcomb.exactmath.poly import Q, X, subs
from stripcomb.qseries import q_derivative, q_divided_derivative, q_factorial, q_int, qbinom, qpochhammer


def test_q_int():
    """Test [n] and [n]!."""
    assert q_int(3) == 1 + Q + Q**2
    assert q_int(0) == 0
    assert q_factorial(3) == (1 + Q) * (1 + Q + Q**2)
    with pytest.raises(ParameterRangeError):
        q_int(-1)


@pytest.mark.parametrize(
    "n,k,expected",
    [(5, 0, 1), (2, 1, 1 + Q), (4, 2, 1 + Q + 2 * Q**2 + Q**3 + Q**4), (3, 5, 0), (3, -1, 0)],
)
def test_qbinom(n, k, expected):
    """Test Gaussian binomials, zero outside the triangle."""
    assert qbinom(n, k) == expected


def test_qbinom_at_q_one():
    """Test that q = 1 gives the ordinary binomial."""
    assert subs(qbinom(4, 2), "q", 1) == 6


def test_qpochhammer():
    """Test (x;q)_n for small n."""
    assert qpochhammer(0) == 1
    assert qpochhammer(2) == 1 - (1 + Q) * X + Q * X**2
    assert subs(qpochhammer(3), "q", 1) == (1 - X) ** 3


def test_q_derivative():
    """Test the q-derivative on monomials and constants."""
    assert q_derivative(X**2) == (1 + Q) * X
    assert q_derivative(5) == 0
    assert q_divided_derivative(X**3, 2) == q_int(3) * X
