"""Catalan, Narayana and Eulerian numbers and the Narayana-type polynomials r_j."""

from functools import lru_cache
from math import comb

from stripcomb.errors import ParameterRangeError
from stripcomb.exactmath.poly import Poly, binom


def catalan(n: int) -> int:
    if n < 0:
        raise ParameterRangeError(f"catalan({n})")
    return comb(2 * n, n) // (n + 1)


def narayana(n: int, k: int) -> int:
    """``N_{n,k} = C(n,k-1) C(n,k) / n`` with ``N_{0,0} = 1``."""
    if n < 0 or k < 0 or k > n:
        raise ParameterRangeError(f"narayana({n}, {k})")
    if n == 0:
        return 1
    return binom(n, k - 1) * binom(n, k) // n


@lru_cache(maxsize=None)
def _eulerian(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k < 0 or k >= n:
        return 0
    return (k + 1) * _eulerian(n - 1, k) + (n - k) * _eulerian(n - 1, k - 1)


def eulerian(n: int, k: int) -> int:
    """Number of permutations of n letters with k descents."""
    if n < 0 or k < 0 or k > max(n - 1, 0):
        raise ParameterRangeError(f"eulerian({n}, {k})")
    return _eulerian(n, k)


def eulerian_row(n: int) -> tuple:
    return tuple(eulerian(n, k) for k in range(max(n, 1)))


def r_poly(j: int) -> Poly:
    """``sum C(j,l)^2 x^(2l) + sum C(j,l) C(j,l-1) x^(2l-1)``."""
    if j < 0:
        raise ParameterRangeError(f"r_{j}")
    coeffs = [0] * (2 * j + 1)
    for ell in range(j + 1):
        coeffs[2 * ell] = comb(j, ell) ** 2
        if ell >= 1:
            coeffs[2 * ell - 1] = comb(j, ell) * comb(j, ell - 1)
    return Poly(coeffs, "x")


def r_poly_narayana(j: int) -> Poly:
    """The same polynomial with odd coefficients written as ``j * N_{j,l}``."""
    if j < 0:
        raise ParameterRangeError(f"r_{j}")
    coeffs = [0] * (2 * j + 1)
    for ell in range(j + 1):
        coeffs[2 * ell] = comb(j, ell) ** 2
        if ell >= 1:
            coeffs[2 * ell - 1] = j * narayana(j, ell)
    return Poly(coeffs, "x")
