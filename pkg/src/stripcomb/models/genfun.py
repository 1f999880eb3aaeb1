"""Types for generating functions and recurrences."""

from dataclasses import dataclass
from typing import Any, Sequence, Tuple

from stripcomb.errors import ZeroConstantTermError
from stripcomb.exactmath.poly import Element, Poly, to_text
from stripcomb.exactmath.series import RatFunc, TruncSeries


@dataclass(frozen=True)
class NamedGF:
    """A generating function together with the label of the formula it realizes."""

    label: str
    ratfunc: RatFunc
    ring: str = "Z"  # coefficient ring: "Z", "Z[t]" or "Z[t,z,1/z]"

    def __post_init__(self):
        if self.ratfunc.den[0] != 1:
            raise ZeroConstantTermError(f"{self.label}: denominator constant term is {self.ratfunc.den[0]}, not 1")

    @property
    def num(self) -> Poly:
        return self.ratfunc.num

    @property
    def den(self) -> Poly:
        return self.ratfunc.den

    def series(self, order: int) -> TruncSeries:
        return self.ratfunc.series(order)

    def to_text(self) -> str:
        return self.ratfunc.to_text()


@dataclass(frozen=True)
class Recurrence:
    """Constant-coefficient recurrence ``c0*a(n+m) + d1*a(n+m-1) + ... + dm*a(n) = 0``.

    ``leading`` is ``c0``; it is 1 for rational recurrences and may be a
    polynomial in t when the recurrence was found over Z[t].
    """

    order: int
    coefficients: Tuple[Element, ...]  # d1 .. dm
    offset: int = 0  # first n from which the relation holds
    leading: Element = 1

    def characteristic_poly(self) -> Poly:
        """Reciprocal characteristic polynomial ``c0 + d1*x + ... + dm*x^m``."""
        return Poly([self.leading, *self.coefficients], "x")

    def residual(self, seq: Sequence[Any], n: int) -> Element:
        acc = self.leading * seq[n + self.order]
        for i, d in enumerate(self.coefficients, start=1):
            acc = acc + d * seq[n + self.order - i]
        return acc

    def holds_on(self, seq: Sequence[Any]) -> bool:
        return all(self.residual(seq, n) == 0 for n in range(self.offset, len(seq) - self.order))

    def to_text(self) -> str:
        return f"order {self.order}, char poly {to_text(self.characteristic_poly())}, valid from n={self.offset}"
