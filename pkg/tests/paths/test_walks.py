"""Tests for walks on path graphs and bounded Dyck paths."""

import pytest

from stripcomb.errors import ParameterRangeError
from stripcomb.paths.walks import adjacency_walks, bounded_dyck, walk_counts


def test_initial_row():
    """Test v(0, m, k) = [m = 1]."""
    assert walk_counts(0, 3) == (1, 0, 0, 0)


def test_walk_counts_fibonacci():
    """Test values on P_4."""
    assert walk_counts(4, 3)[0] == 2
    assert sum(walk_counts(6, 3)) == 13


@pytest.mark.parametrize("k", range(0, 6))
def test_adjacency_power_agrees(k):
    """Test the DP against powers of the adjacency matrix."""
    for n in range(10):
        assert adjacency_walks(n, k) == walk_counts(n, k)


@pytest.mark.parametrize("n2,k,expected", [(6, 3, 5), (8, 3, 13), (0, 0, 1), (4, 0, 0), (10, 5, 42)])
def test_bounded_dyck(n2, k, expected):
    """Test Dyck paths of bounded height."""
    assert bounded_dyck(n2, k) == expected


def test_bounded_dyck_matches_walks():
    """Test that bounded Dyck paths are closed walks from vertex 1."""
    for k in range(6):
        for n2 in range(0, 20, 2):
            assert bounded_dyck(n2, k) == walk_counts(n2, k)[0]


def test_odd_length_rejected():
    """Test that odd Dyck lengths raise."""
    with pytest.raises(ParameterRangeError):
        bounded_dyck(5, 2)
