"""Tests for corridor triangles."""

from stripcomb.exactmath.poly import T, subs
from stripcomb.paths.corridor import corridor_closed, corridor_closed_t, corridor_table, corridor_table_t, table_rows


def test_corridor_rows():
    """Test the fifth row and the diagonal."""
    table = corridor_table(5)
    assert table[5] == [10, 10, 5, 5, 1, 1]
    assert table[4][0] == 6
    assert all(row[n] == 1 for n, row in enumerate(table))


def test_corridor_closed_form():
    """Test c(n,j) = C(n, floor((n-j)/2))."""
    table = corridor_table(12)
    for n, row in enumerate(table):
        assert row == [corridor_closed(n, j) for j in range(n + 1)]


def test_weighted_row():
    """Test the third row of c(n,j,t)."""
    assert corridor_table_t(3)[3] == [1 + 2 * T, 2 + T, 1, 1]


def test_weighted_closed_form():
    """Test the double binomial sums for the unbounded weighted table."""
    for n, row in enumerate(corridor_table_t(10)):
        for j, value in enumerate(row):
            assert value == corridor_closed_t(n, j)


def test_weighted_at_t_one():
    """Test that t = 1 recovers the central binomials."""
    plain = corridor_table(10)
    for n, row in enumerate(corridor_table_t(10)):
        assert subs(row[0], "t", 1) == plain[n][0]


def test_bounded_width_one_is_fibonacci():
    """Test c(n,0,1,3) = F_{n+1}."""
    table = corridor_table_t(9, bound=1)
    assert [subs(row[0], "t", 1) for row in table] == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    assert all(len(row) <= 2 for row in table)


def test_table_rows_csv():
    """Test the n,j,value rendering."""
    lines = table_rows(corridor_table(1)).splitlines()
    assert lines == ["n,j,value", "0,0,1", "1,0,1", "1,1,1"]
