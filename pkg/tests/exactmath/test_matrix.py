"""Tests for exact determinants and linear solves."""

import random
from fractions import Fraction

import pytest
import sympy

from stripcomb.errors import DimensionMismatchError, NonSquareMatrixError
from stripcomb.exactmath.matrix import ExactMatrix, SolveStatus, det_exact, solve_linear_exact
from stripcomb.exactmath.poly import X


def test_small_determinant():
    """Test a 2x2 integer determinant."""
    assert det_exact(ExactMatrix.from_rows([[1, 2], [3, 4]])) == -2


def test_determinant_needs_pivoting():
    """Test a matrix whose leading entry is zero."""
    assert det_exact(ExactMatrix.from_rows([[0, 1], [1, 0]])) == -1


def test_polynomial_determinant():
    """Test a determinant with polynomial entries."""
    assert det_exact(ExactMatrix.from_rows([[X, 1], [1, X]])) == X**2 - 1


@pytest.mark.parametrize("seed", range(5))
def test_determinant_matches_sympy(seed):
    """Test random integer determinants against sympy."""
    rng = random.Random(seed)
    size = rng.randint(1, 6)
    rows = [[rng.randint(-9, 9) for _ in range(size)] for _ in range(size)]
    assert det_exact(ExactMatrix.from_rows(rows)) == int(sympy.Matrix(rows).det())


def test_non_square_determinant():
    """Test that a 2x3 matrix has no determinant."""
    with pytest.raises(NonSquareMatrixError):
        det_exact(ExactMatrix.from_rows([[1, 2, 3], [4, 5, 6]]))


def test_ragged_rows():
    """Test that rows of different lengths are rejected."""
    with pytest.raises(DimensionMismatchError):
        ExactMatrix.from_rows([[1, 2], [3]])


def test_unique_solution():
    """Test a uniquely solvable rational system."""
    solution = solve_linear_exact(ExactMatrix.from_rows([[2, 1], [1, 3]]), [3, 5])
    assert solution.status == SolveStatus.UNIQUE
    assert solution.values == (Fraction(4, 5), Fraction(7, 5))


def test_underdetermined_and_inconsistent():
    """Test the two failure modes of a singular system."""
    singular = ExactMatrix.from_rows([[1, 2], [2, 4]])
    assert solve_linear_exact(singular, [1, 2]).status == SolveStatus.UNDERDETERMINED
    assert solve_linear_exact(singular, [1, 3]).status == SolveStatus.NO_SOLUTION
