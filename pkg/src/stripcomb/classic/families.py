"""Fibonacci and Lucas polynomial families and their Φ/Λ substitutions."""

import os
import threading
from functools import lru_cache
from typing import Any, List

from loguru import logger

from stripcomb.errors import ParameterRangeError, StripcombError
from stripcomb.exactmath.poly import S, T, X, Element, is_scalar

# (x_F, s_F) = (1 + (1-t)x^2, -x^2) turns F and L into Φ and Λ.
PHI_X = 1 + (1 - T) * X**2
PHI_S = -(X**2)


def debug_enabled() -> bool:
    return os.getenv("STRIPCOMB_DEBUG", "") not in ("", "0")


class PolyFamilyCache:
    """Append-only memo of a family ``P_n = x*P_{n-1} + s*P_{n-2}``.

    Readers only ever see fully built entries; extension happens under a lock.
    """

    def __init__(self, tag: str, x: Any, s: Any, p0: Any, p1: Any):
        self.tag = tag
        self.x = x
        self.s = s
        self._entries: List[Element] = [p0, p1]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._entries)

    def __getitem__(self, n: int) -> Element:
        if n < 0:
            raise ParameterRangeError(f"{self.tag}_{n}: index must be nonnegative")
        if n >= len(self._entries):
            with self._lock:
                while len(self._entries) <= n:
                    self._entries.append(self.x * self._entries[-1] + self.s * self._entries[-2])
        if debug_enabled() and n >= 2:
            self.verify(n)
        return self._entries[n]

    def verify(self, upto: int) -> bool:
        """Re-check the defining recurrence on entries ``2..upto``."""
        entries = self._entries
        for n in range(2, min(upto, len(entries) - 1) + 1):
            if entries[n] != self.x * entries[n - 1] + self.s * entries[n - 2]:
                logger.error(f"{self.tag} cache entry {n} violates its recurrence")
                raise StripcombError(f"{self.tag} cache entry {n} violates its recurrence")
        return True


@lru_cache(maxsize=None)
def family(tag: str, x: Any = X, s: Any = S) -> PolyFamilyCache:
    """Shared cache for the family ``tag`` in {F, L} at the arguments ``(x, s)``."""
    if tag == "F":
        return PolyFamilyCache(tag, x, s, 0, 1)
    if tag == "L":
        return PolyFamilyCache(tag, x, s, 2, x)
    raise ParameterRangeError(f"unknown polynomial family {tag!r}")


def fib_poly(n: int, x: Any = X, s: Any = S) -> Element:
    """Fibonacci polynomial ``F_n(x, s)``; ``F_{-1} = 1`` for numeric arguments only."""
    if n < -1:
        raise ParameterRangeError(f"F_{n} is not defined")
    if n == -1:
        if not (is_scalar(x) and is_scalar(s)):
            raise ParameterRangeError("F_{-1} is only defined for numeric arguments")
        return 1
    return family("F", x, s)[n]


def lucas_poly(n: int, x: Any = X, s: Any = S) -> Element:
    """Lucas polynomial ``L_n(x, s)`` with ``L_0 = 2`` and ``L_1 = x``."""
    if n < 0:
        raise ParameterRangeError(f"L_{n} is not defined")
    return family("L", x, s)[n]


def fib_at(n: int) -> Element:
    """``F_n(1, -x^2)``, the building block of the strip generating functions."""
    return fib_poly(n, 1, -(X**2))


def lucas_at(n: int) -> Element:
    """``L_n(1, -x^2)``."""
    return lucas_poly(n, 1, -(X**2))


def phi_poly(n: int) -> Element:
    """``Φ_n(x, t) = F_n(1 + (1-t)x^2, -x^2)``."""
    if n < 0:
        raise ParameterRangeError(f"Φ_{n} is not defined")
    return family("F", PHI_X, PHI_S)[n]


def lambda_poly(n: int) -> Element:
    """``Λ_n(x, t) = L_n(1 + (1-t)x^2, -x^2)``."""
    if n < 0:
        raise ParameterRangeError(f"Λ_{n} is not defined")
    return family("L", PHI_X, PHI_S)[n]
