"""Tests for the Fibonacci, Lucas, Φ and Λ polynomial families."""

import pytest

from stripcomb.classic.families import PolyFamilyCache, fib_at, fib_poly, lambda_poly, lucas_at, lucas_poly, phi_poly
from stripcomb.errors import ParameterRangeError, StripcombError
from stripcomb.exactmath.poly import S, T, X, subs


def test_fibonacci_numbers():
    """Test F_n(1,1) against the Fibonacci numbers."""
    assert [fib_poly(n, 1, 1) for n in range(8)] == [0, 1, 1, 2, 3, 5, 8, 13]


def test_lucas_numbers():
    """Test L_n(1,1) against the Lucas numbers."""
    assert [lucas_poly(n, 1, 1) for n in range(6)] == [2, 1, 3, 4, 7, 11]


def test_symbolic_fibonacci():
    """Test F_5(x,s) in both variables."""
    assert fib_poly(5) == X**4 + 3 * X**2 * S + S**2


def test_minus_one_index():
    """Test that F_{-1} exists for numbers only."""
    assert fib_poly(-1, 1, 1) == 1
    with pytest.raises(ParameterRangeError):
        fib_poly(-1)
    with pytest.raises(ParameterRangeError):
        lucas_poly(-1)


def test_substituted_families():
    """Test F and L at (1, -x^2)."""
    assert fib_at(3) == 1 - X**2
    assert lucas_at(3) == 1 - 3 * X**2


def test_phi_and_lambda_at_t_one():
    """Test that Φ_n and Λ_n reduce to F_n(1,-x^2) and L_n(1,-x^2) at t = 1."""
    assert phi_poly(2) == 1 + (1 - T) * X**2
    for n in range(7):
        assert subs(phi_poly(n), "t", 1) == fib_at(n)
        assert subs(lambda_poly(n), "t", 1) == lucas_at(n)


def test_debug_mode_reverifies(monkeypatch):
    """Test that STRIPCOMB_DEBUG re-checks cached entries."""
    monkeypatch.setenv("STRIPCOMB_DEBUG", "1")
    assert lucas_poly(6, 1, 1) == 18


def test_corrupted_cache_is_detected(monkeypatch):
    """Test that a cache entry breaking its recurrence raises in debug mode."""
    monkeypatch.setenv("STRIPCOMB_DEBUG", "1")
    cache = PolyFamilyCache("F", 1, 1, 0, 1)
    assert cache[4] == 3
    cache._entries[3] = 99
    with pytest.raises(StripcombError):
        cache[4]
