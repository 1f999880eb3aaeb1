"""Rational functions and truncated power series in the series variable."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Any, Callable, List, Sequence, Tuple

from stripcomb.errors import TruncationTooSmallError, ZeroConstantTermError
from stripcomb.exactmath.poly import (
    Element,
    Laurent,
    Poly,
    coeff,
    degree_in,
    exact_div,
    is_element,
    min_exponent,
    subs,
    to_text,
    unit_inverse,
)


def as_poly(value: Any, var: str = "x") -> Poly:
    """View ``value`` as a polynomial in ``var``."""
    if isinstance(value, Poly) and value.var == var:
        return value
    return Poly([value], var)


@dataclass(frozen=True)
class TruncSeries:
    """Coefficients of ``x^0 .. x^order`` of a power series."""

    order: int
    coeffs: Tuple[Element, ...]

    def __post_init__(self):
        if self.order < 0:
            raise TruncationTooSmallError("series order must be nonnegative")
        if len(self.coeffs) != self.order + 1:
            raise TruncationTooSmallError(f"expected {self.order + 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_values(cls, values: Sequence[Any]) -> "TruncSeries":
        return cls(len(values) - 1, tuple(values))

    @classmethod
    def from_poly(cls, poly: Any, order: int, var: str = "x") -> "TruncSeries":
        p = as_poly(poly, var)
        return cls(order, tuple(p[i] for i in range(order + 1)))

    def __getitem__(self, n: int) -> Element:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise TruncationTooSmallError(f"cannot extend a series of order {self.order} to {order}")
        return TruncSeries(order, self.coeffs[: order + 1])

    def map(self, fn: Callable[[Element], Any]) -> "TruncSeries":
        return TruncSeries(self.order, tuple(fn(c) for c in self.coeffs))

    def subs(self, var: str, value: Any) -> "TruncSeries":
        return self.map(lambda c: subs(c, var, value))

    def coefficient(self, var: str, exponent: int) -> "TruncSeries":
        """Series of the ``var**exponent`` coefficients, e.g. the ``t^j`` part."""
        return self.map(lambda c: coeff(c, var, exponent))

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        order = min(self.order, other.order)
        return TruncSeries(order, tuple(self[i] + other[i] for i in range(order + 1)))

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        order = min(self.order, other.order)
        return TruncSeries(order, tuple(self[i] - other[i] for i in range(order + 1)))

    def __mul__(self, other: Any) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            order = min(self.order, other.order)
            out: List[Any] = [0] * (order + 1)
            for i in range(order + 1):
                if self[i] == 0:
                    continue
                for j in range(order + 1 - i):
                    out[i + j] = out[i + j] + self[i] * other[j]
            return TruncSeries(order, tuple(out))
        if isinstance(other, Poly) and other.var == "x":
            return self * TruncSeries.from_poly(other, self.order)
        if is_element(other):
            return self.map(lambda c: c * other)
        return NotImplemented

    __rmul__ = __mul__

    def divided_derivative(self, j: int) -> "TruncSeries":
        """Apply ``D^j / j!``; the result is ``j`` terms shorter."""
        if j > self.order:
            raise TruncationTooSmallError(f"order {self.order} too short for {j} derivatives")
        order = self.order - j
        return TruncSeries(order, tuple(comb(m + j, j) * self[m + j] for m in range(order + 1)))

    def to_poly(self, var: str = "x") -> Poly:
        return Poly(self.coeffs, var)

    def to_text(self) -> str:
        return ", ".join(to_text(c) for c in self.coeffs)


def ratfunc_series(r: "RatFunc", n_max: int) -> TruncSeries:
    """Expand ``num/den`` to order ``n_max`` by solving ``num = den * series`` term by term."""
    num, den = as_poly(r.num, r.var), as_poly(r.den, r.var)
    c0 = den[0]
    if c0 == 0:
        raise ZeroConstantTermError(f"denominator {to_text(den)} has zero constant term")
    inverse = unit_inverse(c0)
    out: List[Any] = []
    for n in range(n_max + 1):
        acc = num[n]
        for i in range(1, min(n, den.degree) + 1):
            acc = acc - den[i] * out[n - i]
        out.append(acc * inverse if inverse is not None else exact_div(acc, c0))
    return TruncSeries(n_max, tuple(out))


class RatFunc:
    """Pair ``num/den`` of polynomials in the series variable, never reduced.

    Equality is cross-multiplication, so ``1/(1-x)`` equals ``(1+x)/(1-x^2)``.
    """

    __slots__ = ("num", "den", "var")

    def __init__(self, num: Any, den: Any = 1, var: str = "x"):
        den_poly = as_poly(den, var)
        if den_poly.is_zero:
            raise ZeroConstantTermError("denominator is zero")
        if den_poly[0] == 0:
            raise ZeroConstantTermError(f"denominator {to_text(den_poly)} has zero constant term in {var}")
        self.num = as_poly(num, var)
        self.den = den_poly
        self.var = var

    def _lift(self, other: Any) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        return RatFunc(other, 1, self.var)

    def __add__(self, other: Any) -> "RatFunc":
        o = self._lift(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den, self.var)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, self.var)

    def __sub__(self, other: Any) -> "RatFunc":
        return self + (-self._lift(other))

    def __rsub__(self, other: Any) -> "RatFunc":
        return self._lift(other) - self

    def __mul__(self, other: Any) -> "RatFunc":
        o = self._lift(other)
        return RatFunc(self.num * o.num, self.den * o.den, self.var)

    __rmul__ = __mul__

    def reciprocal(self) -> "RatFunc":
        return RatFunc(self.den, self.num, self.var)

    def __truediv__(self, other: Any) -> "RatFunc":
        return self * self._lift(other).reciprocal()

    def __rtruediv__(self, other: Any) -> "RatFunc":
        return self._lift(other) * self.reciprocal()

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, RatFunc) and not is_element(other):
            return NotImplemented
        o = self._lift(other)
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def reflect(self) -> "RatFunc":
        """Substitute ``x -> -x``."""
        return RatFunc(self.num.reflect(), self.den.reflect(), self.var)

    def subs(self, var: str, value: Any) -> "RatFunc":
        return RatFunc(subs(self.num, var, value), subs(self.den, var, value), self.var)

    def cleared(self, var: str = "z") -> "RatFunc":
        """Multiply numerator and denominator by the power of ``var`` that removes negative exponents."""
        shift = -min(min_exponent(self.num, var), min_exponent(self.den, var))
        if shift == 0:
            return self
        factor = Laurent.monomial(1, shift, var)
        return RatFunc(self.num * factor, self.den * factor, self.var)

    def normalized(self) -> "RatFunc":
        """Scale so that the denominator has constant term one, when that is a unit."""
        inverse = unit_inverse(self.den[0])
        if inverse is None or inverse == 1:
            return self
        return RatFunc(self.num * inverse, self.den * inverse, self.var)

    def series(self, n_max: int) -> TruncSeries:
        return ratfunc_series(self, n_max)

    def degree(self) -> Tuple[int, int]:
        return degree_in(self.num, self.var), degree_in(self.den, self.var)

    def to_text(self) -> str:
        return f"({to_text(self.num)}) / ({to_text(self.den)})"

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"
