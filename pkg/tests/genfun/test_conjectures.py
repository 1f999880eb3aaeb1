"""Tests for the extracted v_j polynomials and the conjectures built on them."""

import pytest

from stripcomb.errors import ParameterRangeError, TruncationTooSmallError
from stripcomb.exactmath.poly import X
from stripcomb.genfun.conjectures import (
    NOT_POLYNOMIAL,
    eulerian_reduction_check,
    extract_vj,
    min_truncation,
    reflect_pj,
    vj_k_recurrence_report,
    vj_property_check,
    vj_recurrence_rows,
    vj_z_pipeline,
)
from stripcomb.genfun.zfamily import FAMILIES, gf_z, z_family_check


@pytest.mark.parametrize(
    "j,k,expected",
    [(3, 0, 1), (3, 1, (1 + X) ** 3), (1, 2, 1 + X + X**2), (2, 2, 1 + 2 * X + 4 * X**2 + X**3 + X**4)],
)
def test_extract_vj(j, k, expected):
    """Test known v_j(x,k)."""
    assert extract_vj(j, k) == expected


def test_short_window():
    """Test that a window too short to decide raises."""
    with pytest.raises(TruncationTooSmallError):
        extract_vj(2, 2, trunc=min_truncation(2, 2) - 1)
    with pytest.raises(ParameterRangeError):
        extract_vj(0, 2)


def test_vj_two_rows():
    """Test the k = 2 rows and their values at +-1."""
    rows = vj_recurrence_rows(5)
    for j in range(1, 6):
        assert rows[j](1) == 3**j
        assert rows[j](-1) == 3 ** (j - 1)


def test_vj_properties():
    """Test positivity, degrees, special values and closed forms."""
    report = vj_property_check(j_max=2, k_max=4)
    assert report.passed, report.witness
    assert "recurrences" in report.details


def test_k3_recurrence_sign():
    """Test the recurrence in j for k = 3 with the negated last term."""
    assert vj_k_recurrence_report(4)["k3_negated"]["holds"]


@pytest.mark.parametrize("j", [1, 2])
def test_z_pipeline(j):
    """Test recovery of p_j and its specializations."""
    report = vj_z_pipeline(j)
    assert report.passed, report.witness
    if j == 1:
        assert report.details["p"] == 1


def test_reflection_is_involutive():
    """Test that reflecting twice is the identity."""
    p = vj_z_pipeline(2).details["p"]
    assert reflect_pj(reflect_pj(p, 2), 2) == p


def test_z_pipeline_truncation():
    """Test that a truncation below the z-degree raises."""
    with pytest.raises(TruncationTooSmallError):
        vj_z_pipeline(2, k_max=4, z_trunc=2)


def test_eulerian_reduction():
    """Test the x = 1 reduction to Eulerian rows."""
    assert eulerian_reduction_check(j_max=3).passed


def test_not_polynomial_marker():
    """Test the marker value."""
    assert NOT_POLYNOMIAL.value == "NOT_POLYNOMIAL"


@pytest.mark.parametrize("strip", [1, 2, 3])
@pytest.mark.parametrize("which", ["conj4", "conj5", "prop5"])
def test_z_families(strip, which):
    """Test the z-graded generating functions against the binomial sums."""
    assert z_family_check(strip, which, order=12).passed


def test_z_one_specializations():
    """Test the t = z = 1 forms and the strip-3 prefix."""
    for strip in (2, 3, 4):
        which = "prop5_z1_odd" if strip % 2 else "prop5_z1_even"
        assert z_family_check(strip, which, order=12).passed
    series = gf_z(3, "prop5_z1_odd").series(5)
    assert [series[n] for n in range(6)] == [1, 1, 2, 3, 7, 12]
    with pytest.raises(ParameterRangeError):
        gf_z(3, "prop5_z1_even")
    with pytest.raises(ParameterRangeError):
        gf_z(3, "conj6")
    assert "conj4" in FAMILIES
