"""Tests for the closed forms of path counts, weights and walks."""

from fractions import Fraction

import pytest

from stripcomb.errors import ParameterRangeError
from stripcomb.exactmath.poly import T, subs
from stripcomb.formulas import (
    a_count,
    a_count_z,
    a_poly,
    a_poly_z,
    a_z_laurent,
    closed_forms_check,
    corridor_check,
    count_oracle_check,
    even_strip_doubling_check,
    trig_check,
    two_reading_audit,
    up_prefix_check,
    v_closed,
    v_trig,
    walks_check,
    weight_oracle_check,
)
from stripcomb.models.report import Status


@pytest.mark.parametrize("n,k,expected", [(7, 4, 27), (9, 8, 125), (6, 3, 13), (0, 0, 1), (3, 0, 0)])
def test_a_count(n, k, expected):
    """Test inclusion-exclusion counts."""
    assert a_count(n, k) == expected


def test_single_lane_strip():
    """Test a(n,1) = 1."""
    assert all(a_count(n, 1) == 1 for n in range(21))


def test_final_height_grading_at_one():
    """Test the Jacobsthal numbers and powers of two at z = 1."""
    assert [a_count_z(n, 1, 1) for n in range(6)] == [1, 1, 3, 5, 11, 21]
    assert [a_count_z(n, 2, 1) for n in range(6)] == [1, 1, 2, 4, 8, 16]


def test_grading_at_minus_one_and_two():
    """Test that z = -1 gives a(n,k) and z = 2 can leave the integers."""
    assert all(a_count_z(n, 4, -1) == a_count(n, 4) for n in range(15))
    assert a_count_z(3, 0, 2) == Fraction(27, 2)
    assert subs(a_z_laurent(6, 2), "z", -1) == a_count(6, 2)


@pytest.mark.parametrize("n,k,expected", [(6, 3, 1 + 5 * T + 6 * T**2 + T**3), (5, 4, 1 + 5 * T + 3 * T**2)])
def test_a_poly(n, k, expected):
    """Test the weight polynomials from the alternating double sum."""
    assert a_poly(n, k) == expected


def test_a_poly_at_t_one():
    """Test that t = 1 recovers the counts."""
    for k in range(1, 7):
        for n in range(14):
            assert subs(a_poly(n, k), "t", 1) == a_count(n, k)


def test_a_poly_z_specializations():
    """Test z = -1 against a(n,k,t)."""
    for k in range(1, 7):
        for n in range(13):
            assert subs(a_poly_z(n, k), "z", -1) == a_poly(n, k)


def test_a_poly_rejects_k_zero():
    """Test that the weighted formulas need k >= 1."""
    with pytest.raises(ParameterRangeError):
        a_poly(3, 0)
    with pytest.raises(ParameterRangeError):
        a_poly_z(3, 0)


def test_v_closed():
    """Test boundary, initial and Fibonacci values."""
    assert v_closed(5, 0, 3) == 0
    assert v_closed(5, 5, 3) == 0
    assert v_closed(0, 1, 3) == 1
    assert v_closed(5, 2, 3) == 5
    with pytest.raises(ParameterRangeError):
        v_closed(3, 6, 3)


def test_v_trig():
    """Test the spectral formula against exact values."""
    assert v_trig(0, 1, 3) == pytest.approx(1.0, abs=1e-9)
    assert v_trig(4, 1, 3) == pytest.approx(2.0, abs=1e-6)
    assert v_trig(6, 1, 4) == pytest.approx(v_closed(6, 1, 4), abs=1e-6)
    with pytest.raises(ParameterRangeError):
        v_trig(3, 0, 3)


@pytest.mark.parametrize(
    "check",
    [
        lambda: count_oracle_check(n_max=10, k_max=5),
        lambda: weight_oracle_check(n_max=10, k_max=5),
        lambda: up_prefix_check(),
        lambda: even_strip_doubling_check(),
        lambda: closed_forms_check(n_max=20),
        lambda: walks_check(n_max=12, k_max=5),
        lambda: trig_check(n_max=20, k_max=6),
        lambda: corridor_check(n_max=10),
    ],
)
def test_oracle_checks_pass(check):
    """Test the closed forms against their oracles on small grids."""
    report = check()
    assert report.status == Status.VERIFIED_UP_TO, report.witness


def test_two_reading_audit():
    """Test that both readings are evaluated and reported."""
    verdicts = two_reading_audit(n_max=8, k_max=3)
    assert set(verdicts) == {"printed", "variant"}
    for verdict in verdicts.values():
        assert isinstance(verdict["holds"], bool)
        assert verdict["grid"] == {"n": [0, 8], "k": [1, 3]}
