"""Exact matrices: fraction-free determinants and rational linear solves."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Optional, Sequence, Tuple

import numpy as np

from stripcomb.errors import DimensionMismatchError, NonSquareMatrixError
from stripcomb.exactmath.poly import Element, exact_div


@dataclass(frozen=True)
class ExactMatrix:
    """Row-major matrix whose entries are exact ring elements."""

    rows: int
    cols: int
    entries: Tuple[Element, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise DimensionMismatchError("rows have different lengths")
        return cls(len(rows), width, tuple(e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    def __getitem__(self, index: Tuple[int, int]) -> Element:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Element, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def apply(self, vector: Sequence[Any]) -> Tuple[Element, ...]:
        if len(vector) != self.cols:
            raise DimensionMismatchError(f"vector of length {len(vector)} against {self.cols} columns")
        out = []
        for i in range(self.rows):
            acc: Any = 0
            for j in range(self.cols):
                acc = acc + self[i, j] * vector[j]
            out.append(acc)
        return tuple(out)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        entries = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc: Any = 0
                for k in range(self.cols):
                    acc = acc + self[i, k] * other[k, j]
                entries.append(acc)
        return ExactMatrix(self.rows, other.cols, tuple(entries))

    def __pow__(self, exponent: int) -> "ExactMatrix":
        if self.rows != self.cols:
            raise NonSquareMatrixError("only square matrices have powers")
        result = ExactMatrix.identity(self.rows)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result


def det_exact(m: ExactMatrix) -> Element:
    """Determinant by fraction-free (Bareiss) elimination with row pivoting."""
    if m.rows != m.cols:
        raise NonSquareMatrixError(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_rows()
    sign = 1
    prev: Any = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


class SolveStatus(str, Enum):
    UNIQUE = "unique"
    NO_SOLUTION = "no-solution"
    UNDERDETERMINED = "underdetermined"


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of an exact linear solve; ``values`` only for a unique solution."""

    status: SolveStatus
    values: Optional[Tuple[Fraction, ...]] = None
    rank: int = 0


def solve_linear_exact(a: ExactMatrix, rhs: Sequence[Any]) -> LinearSolution:
    """Gauss-Jordan elimination over the rationals on a numpy object array."""
    if a.rows < 1:
        raise DimensionMismatchError("system has no equations")
    if len(rhs) != a.rows:
        raise DimensionMismatchError(f"right-hand side of length {len(rhs)} for {a.rows} equations")

    aug = np.array([[Fraction(e) for e in a.row(i)] + [Fraction(rhs[i])] for i in range(a.rows)], dtype=object)
    rank = 0
    for c in range(a.cols):
        pivot = next((i for i in range(rank, a.rows) if aug[i, c] != 0), None)
        if pivot is None:
            continue
        if pivot != rank:
            aug[[rank, pivot]] = aug[[pivot, rank]]
        aug[rank, :] = aug[rank, :] / aug[rank, c]
        for i in range(a.rows):
            if i != rank and aug[i, c] != 0:
                aug[i, :] = aug[i, :] - aug[i, c] * aug[rank, :]
        rank += 1
        if rank == a.rows:
            break

    if any(aug[i, a.cols] != 0 for i in range(rank, a.rows)):
        return LinearSolution(SolveStatus.NO_SOLUTION, rank=rank)
    if rank < a.cols:
        return LinearSolution(SolveStatus.UNDERDETERMINED, rank=rank)
    return LinearSolution(SolveStatus.UNIQUE, tuple(aug[i, a.cols] for i in range(a.cols)), rank)
