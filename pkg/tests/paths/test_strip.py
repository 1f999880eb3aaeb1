"""Tests for strip path enumeration and brute-force weights."""

import pytest

from stripcomb.errors import ParameterRangeError
from stripcomb.exactmath.poly import T, subs
from stripcomb.models.base import LatticePath, StripSpec
from stripcomb.paths.strip import enumerate_strip, weight_poly_bruteforce, weight_poly_bruteforce_q, weight_up_prefix


def test_strip_spec_bounds():
    """Test the height window for odd and even k."""
    assert (StripSpec.of(3).lower, StripSpec.of(3).upper) == (-2, 1)
    assert (StripSpec.of(4).lower, StripSpec.of(4).upper) == (-2, 2)
    with pytest.raises(ParameterRangeError):
        StripSpec.of(-1)


def test_small_strip_in_order():
    """Test A_{3,2} in lexicographic order."""
    assert [str(p) for p in enumerate_strip(3, 2)] == ["DUD", "UDD"]


def test_empty_path():
    """Test that n = 0 yields the empty path only."""
    assert [p.steps for p in enumerate_strip(0, 4)] == [""]


def test_wide_strip_is_unconstrained():
    """Test that for n <= k every path ending at 0 or -1 is counted."""
    assert len(list(enumerate_strip(5, 5))) == 10


def test_parallel_enumeration_matches():
    """Test that splitting over processes gives the same ordered output."""
    assert list(enumerate_strip(9, 4, jobs=2)) == list(enumerate_strip(9, 4))


def test_negative_arguments():
    """Test rejection of negative n."""
    with pytest.raises(ParameterRangeError):
        list(enumerate_strip(-1, 2))


def test_path_weight():
    """Test peaks at height >= 1 and valleys at height <= -2."""
    assert LatticePath("UDUD").weight().e == 2
    assert LatticePath("UDUD").weight().iota == 4
    assert LatticePath("DDUU").weight().e == 1
    assert LatticePath("DUDU").weight().e == 0
    with pytest.raises(ParameterRangeError):
        LatticePath("UXD")


@pytest.mark.parametrize(
    "n,k,expected",
    [(4, 3, 1 + 3 * T + T**2), (6, 4, 1 + 7 * T + 9 * T**2 + T**3), (7, 1, 1)],
)
def test_weight_polynomials(n, k, expected):
    """Test brute-force weight polynomials."""
    assert weight_poly_bruteforce(n, k) == expected


def test_q_refinement_at_q_one():
    """Test that summing the q-coefficients recovers the t-weights."""
    assert subs(weight_poly_bruteforce_q(6, 3), "q", 1) == 1 + 5 * T + 6 * T**2 + T**3


def test_up_prefix():
    """Test weights of paths starting with j up-steps."""
    assert weight_up_prefix(6, 3, 0) == weight_poly_bruteforce(6, 3)
    assert weight_up_prefix(4, 3, 1) == T + T**2
    assert weight_up_prefix(8, 5, 3) == 0
    with pytest.raises(ParameterRangeError):
        weight_up_prefix(4, 4, 1)


def _w(n, strip):
    return weight_poly_bruteforce(n, strip) if n >= 0 else 0


@pytest.mark.parametrize("strip", [3, 5, 7])
def test_up_prefix_peak_decomposition(strip):
    """Test splitting w+_{n,j} at the first peak, over n <= 12 and 2 <= j <= k."""
    k = (strip - 1) // 2
    for n in range(13):
        for j in range(2, k + 1):
            tail = sum(weight_up_prefix(n - 2 * ell - 2, strip, j - ell) for ell in range(j - 1))
            expected = weight_up_prefix(n, strip, j + 1) + T * tail + T * _w(n - 2 * j, strip)
            assert weight_up_prefix(n, strip, j) == expected, (n, j)


@pytest.mark.parametrize("strip", [3, 5, 7])
def test_up_prefix_first_step(strip):
    """Test that paths starting with a down-step weigh w_{n-1}."""
    for n in range(1, 13):
        assert weight_up_prefix(n, strip, 1) == _w(n, strip) - _w(n - 1, strip), n


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_even_strip_doubling(k):
    """Test a(2n+2, 2k) = 2 a(2n+1, 2k) at t = 1 for n <= 7."""
    for n in range(8):
        odd = subs(weight_poly_bruteforce(2 * n + 1, 2 * k), "t", 1)
        assert subs(weight_poly_bruteforce(2 * n + 2, 2 * k), "t", 1) == 2 * odd, n
