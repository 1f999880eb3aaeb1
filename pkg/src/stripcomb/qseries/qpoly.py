"""q-integers, q-binomials, q-Pochhammer products and the q-derivative, all over Z[q]."""

from functools import lru_cache
from typing import Any

from stripcomb.errors import ParameterRangeError
from stripcomb.exactmath.poly import Q, X, Poly, exact_div, subs
from stripcomb.exactmath.series import TruncSeries, as_poly

# A polynomial in q, and a polynomial in x whose coefficients are polynomials in q.
QPoly = Poly
QXPoly = Poly


def q_int(n: int) -> QPoly:
    """``[n] = 1 + q + ... + q^(n-1)``."""
    if n < 0:
        raise ParameterRangeError(f"[{n}] is defined for n >= 0")
    return Poly([1] * n, "q")


def q_factorial(n: int) -> QPoly:
    if n < 0:
        raise ParameterRangeError(f"[{n}]! is defined for n >= 0")
    value = as_poly(1, "q")
    for i in range(1, n + 1):
        value = value * q_int(i)
    return value


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> QPoly:
    """Gaussian binomial via ``[n,k] = [n-1,k-1] + q^k [n-1,k]``; zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return Poly((), "q")
    if k == 0 or k == n:
        return as_poly(1, "q")
    return qbinom(n - 1, k - 1) + Q**k * qbinom(n - 1, k)


def qpochhammer(n: int, a: Any = X, base: Any = Q) -> QXPoly:
    """``(a; base)_n = prod_{j<n} (1 - a base^j)``; ``(a; base)_0 = 1``."""
    if n < 0:
        raise ParameterRangeError(f"(a;q)_{n} needs n >= 0")
    value = as_poly(1)
    for j in range(n):
        value = value * (1 - a * base**j)
    return value


def q_derivative(f: Any) -> QXPoly:
    """``D_q f(x) = (f(x) - f(qx)) / ((1-q) x)``."""
    f = as_poly(f)
    return as_poly(exact_div(f - subs(f, "x", Q * X), (1 - Q) * X))


def q_divided_derivative(f: Any, j: int) -> QXPoly:
    """``D_q^j f / [j]!`` through ``x^n -> [n,j] x^(n-j)``."""
    if j < 0:
        raise ParameterRangeError(f"derivative order must be nonnegative, got {j}")
    f = as_poly(f)
    return Poly([qbinom(n + j, j) * f[n + j] for n in range(max(f.degree - j + 1, 0))], "x")


def q_divided_derivative_series(series: TruncSeries, j: int) -> TruncSeries:
    """The same operator on a truncated series; the result is ``j`` terms shorter."""
    if j > series.order:
        raise ParameterRangeError(f"order {series.order} too short for {j} q-derivatives")
    order = series.order - j
    return TruncSeries(order, tuple(qbinom(m + j, j) * series[m + j] for m in range(order + 1)))


def q_min_exponent(value: Any) -> int:
    """Lowest power of q with a nonzero coefficient."""
    p = as_poly(value, "q")
    if p.is_zero:
        raise ParameterRangeError("the zero polynomial has no lowest power")
    return next(e for e, c in p.items() if c != 0)


def at_q_one(value: Any) -> Any:
    if isinstance(value, TruncSeries):
        return value.subs("q", 1)
    return subs(value, "q", 1)
