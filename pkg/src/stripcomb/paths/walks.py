"""Walks on the path graph P_{k+1} and height-bounded Dyck paths."""

from functools import lru_cache
from typing import Tuple

from stripcomb.errors import ParameterRangeError
from stripcomb.exactmath.matrix import ExactMatrix


def walk_counts(n: int, k: int) -> Tuple[int, ...]:
    """``(v(n,1,k), ..., v(n,k+1,k))``: n-step walks on P_{k+1} from vertex 1 to each vertex."""
    if n < 0 or k < 0:
        raise ParameterRangeError(f"walk_counts needs n, k >= 0, got n={n}, k={k}")
    # Padded with the boundary vertices 0 and k+2, which stay at zero.
    row = [0] * (k + 3)
    row[1] = 1
    for _ in range(n):
        row = [0] + [row[m - 1] + row[m + 1] for m in range(1, k + 2)] + [0]
    return tuple(row[1 : k + 2])


@lru_cache(maxsize=None)
def _dyck(n: int, k: int) -> int:
    if n == 0:
        return 1
    if k == 0:
        return 0
    return sum(_dyck(j, k) * _dyck(n - 1 - j, k - 1) for j in range(n))


def bounded_dyck(n2: int, k: int) -> int:
    """Dyck paths of length ``n2`` and height at most ``k``, by first-return convolution."""
    if n2 < 0 or n2 % 2:
        raise ParameterRangeError(f"Dyck paths need an even nonnegative length, got {n2}")
    if k < 0:
        raise ParameterRangeError(f"height bound must be nonnegative, got {k}")
    return _dyck(n2 // 2, k)


def adjacency_matrix(k: int) -> ExactMatrix:
    """Adjacency matrix of the path graph P_{k+1}."""
    if k < 0:
        raise ParameterRangeError(f"k must be nonnegative, got {k}")
    size = k + 1
    return ExactMatrix.from_rows([[1 if abs(i - j) == 1 else 0 for j in range(size)] for i in range(size)])


def adjacency_walks(n: int, k: int) -> Tuple[int, ...]:
    """First row of ``M_{k+1}^n``, which counts the same walks as :func:`walk_counts`."""
    power = adjacency_matrix(k) ** n
    return tuple(power.row(0))
