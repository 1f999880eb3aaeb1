"""Corridor triangles c(n,j) and their t-weighted, optionally bounded, refinements."""

import csv
import io
from typing import Any, List, Optional, Sequence

from stripcomb.errors import ParameterRangeError
from stripcomb.exactmath.poly import Poly, T, binom, to_text

Table = List[List[Any]]


def corridor_table(n_max: int) -> Table:
    """Rows ``c(n, 0..n)`` of nonnegative paths with horizontal steps allowed at height 0."""
    if n_max < 0:
        raise ParameterRangeError(f"n_max must be nonnegative, got {n_max}")
    rows: Table = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1] + [0, 0]
        row = [prev[0] + prev[1]]
        row += [prev[j - 1] + prev[j + 1] for j in range(1, n + 1)]
        rows.append(row)
    return rows


def corridor_closed(n: int, j: int) -> int:
    return binom(n, (n - j) // 2) if 0 <= j <= n else 0


def corridor_table_t(n_max: int, bound: Optional[int] = None) -> Table:
    """Rows of ``c(n,j,t)``; with ``bound = k`` the entries ``c(n,j,t,2k+1)`` with ``c(n,k+1,...) = 0``.

    Row 0 and even ``j > 0`` take the factor t on the ``j+1`` neighbour, odd ``j`` are unweighted.
    """
    if n_max < 0:
        raise ParameterRangeError(f"n_max must be nonnegative, got {n_max}")
    if bound is not None and bound < 0:
        raise ParameterRangeError(f"bound must be nonnegative, got {bound}")

    def width(n: int) -> int:
        return n + 1 if bound is None else min(n, bound) + 1

    rows: Table = [[Poly([1], "t")]]
    for n in range(1, n_max + 1):
        prev = rows[-1]

        def at(j: int) -> Any:
            return prev[j] if 0 <= j < len(prev) else 0

        row = []
        for j in range(width(n)):
            up = at(j + 1)
            if j == 0:
                row.append(at(0) + T * up)
            elif j % 2 == 0:
                row.append(at(j - 1) + T * up)
            else:
                row.append(at(j - 1) + up)
        rows.append([Poly([0], "t") + c for c in row])
    return rows


def corridor_closed_t(n: int, j: int) -> Poly:
    """Closed form of the unbounded ``c(n,j,t)`` as a double binomial sum."""
    lo, hi = n // 2, (n + 1) // 2
    if j % 2 == 0:
        m = j // 2
        return Poly([binom(lo, i + m) * binom(hi, i) for i in range(n + 1)], "t")
    m = (j - 1) // 2
    return Poly([binom(lo, i) * binom(hi, i + m + 1) for i in range(n + 1)], "t")


def table_rows(table: Sequence[Sequence[Any]]) -> str:
    """CSV text with header ``n,j,value``, one line per entry."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["n", "j", "value"])
    for n, row in enumerate(table):
        for j, value in enumerate(row):
            writer.writerow([n, j, to_text(value)])
    return out.getvalue()
