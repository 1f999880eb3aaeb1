"""Base types used across stripcomb: paths, strips and their weights."""

from dataclasses import dataclass
from itertools import accumulate
from typing import Tuple

from stripcomb.errors import ParameterRangeError


@dataclass(frozen=True)
class StripSpec:
    """Height window of the strip with parameter k."""

    k: int
    lower: int  # -floor((k+1)/2)
    upper: int  # floor(k/2)

    def __post_init__(self):
        if self.upper - self.lower != self.k:
            raise ParameterRangeError(f"strip bounds [{self.lower}, {self.upper}] do not have width {self.k}")

    @classmethod
    def of(cls, k: int) -> "StripSpec":
        if k < 0:
            raise ParameterRangeError(f"strip parameter must be nonnegative, got {k}")
        return cls(k=k, lower=-((k + 1) // 2), upper=k // 2)

    def contains(self, height: int) -> bool:
        return self.lower <= height <= self.upper


@dataclass(frozen=True)
class PathWeight:
    """Extremal-point statistics of a path."""

    e: int  # number of extremal points
    iota: int = 0  # sum of their x-coordinates

    def __post_init__(self):
        if self.e < 0 or (self.e > 0 and self.iota < self.e):
            raise ParameterRangeError(f"inconsistent weight e={self.e}, iota={self.iota}")


@dataclass(frozen=True)
class LatticePath:
    """A path of up-steps U and down-steps D starting at height 0."""

    steps: str

    def __post_init__(self):
        if set(self.steps) - {"U", "D"}:
            raise ParameterRangeError(f"steps must be over U and D, got {self.steps!r}")

    @property
    def heights(self) -> Tuple[int, ...]:
        return tuple(accumulate((1 if s == "U" else -1 for s in self.steps), initial=0))

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def final_height(self) -> int:
        return self.steps.count("U") - self.steps.count("D")

    def weight(self) -> PathWeight:
        """Peaks at height >= 1 and valleys at height <= -2, interior vertices only."""
        h = self.heights
        e = iota = 0
        for i in range(1, len(h) - 1):
            peak = h[i - 1] < h[i] > h[i + 1] and h[i] >= 1
            valley = h[i - 1] > h[i] < h[i + 1] and h[i] <= -2
            if peak or valley:
                e += 1
                iota += i
        return PathWeight(e=e, iota=iota)

    def __str__(self) -> str:
        return self.steps
