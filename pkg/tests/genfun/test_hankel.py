"""Tests for Hankel determinants and annihilating shift polynomials."""

import pytest

from stripcomb.errors import InsufficientDataError, SingularMinorError
from stripcomb.exactmath.poly import X
from stripcomb.genfun.hankel import (
    annihilate_check,
    central_binomials,
    hankel_char_poly,
    hankel_central_binomial_check,
    hankel_inputs,
)


def test_central_binomial_determinant():
    """Test the bordered determinant for m = 2."""
    assert central_binomials(4) == [1, 1, 2, 3]
    assert hankel_char_poly(central_binomials(4), 2) == 1 - X - X**2


def test_modified_input_determinant():
    """Test the lowered last value for m = 3."""
    assert hankel_inputs(2, modified=True) == [1, 1, 2, 3, 6, 9]
    assert hankel_char_poly(hankel_inputs(2, modified=True), 3) == 1 - 3 * X**2


def test_geometric_sequence():
    """Test a constant sequence."""
    assert hankel_char_poly([1, 1, 1, 1], 1) == 1 - X


def test_degenerate_inputs():
    """Test short and singular inputs."""
    with pytest.raises(InsufficientDataError):
        hankel_char_poly([1, 1, 2], 2)
    with pytest.raises(SingularMinorError):
        hankel_char_poly([0, 0, 1, 1], 1)


def test_hankel_central_binomial():
    """Test both families of bordered determinants."""
    assert hankel_central_binomial_check(k_max=3).passed


@pytest.mark.parametrize("k", range(1, 5))
def test_annihilators(k):
    """Test the shift polynomials on their strips and record the literal reading."""
    report = annihilate_check(k, n_max=20)
    assert report.passed, report.witness
    assert isinstance(report.details["literal_reading"]["holds"], bool)
