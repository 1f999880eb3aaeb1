"""Dense polynomials with exact coefficients.

A :class:`Poly` is a polynomial in one tagged variable whose coefficients are
scalars (``int`` or ``Fraction``) or polynomials in lower-ranked variables. A
polynomial in ``x`` over ``t`` is therefore a ``Poly`` whose coefficients are
``Poly`` objects in ``t``. Operators lift the lower-ranked operand into the
coefficient ring, so ``x * t`` and ``t * x`` give the same element.

:class:`Laurent` covers the one place where negative exponents occur: the
grading variable ``z``. A Laurent polynomial without negative exponents is
always returned as a plain ``Poly``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Any, Callable, Dict, Iterable, Iterator, Optional, Tuple, Union

from stripcomb.errors import InexactDivisionError, VariableMismatchError

# Outer variables rank higher than the variables of their coefficients.
RANKS: Dict[str, int] = {"q": 0, "t": 1, "s": 2, "z": 3, "y": 4, "x": 5}

Element = Union[int, Fraction, "Poly", "Laurent"]


def rank(value: Any) -> int:
    """Rank of the outermost variable of ``value``, ``-1`` for scalars."""
    if isinstance(value, (Poly, Laurent)):
        return RANKS[value.var]
    return -1


def is_scalar(value: Any) -> bool:
    return isinstance(value, (int, Fraction))


def is_element(value: Any) -> bool:
    return isinstance(value, (int, Fraction, Poly, Laurent))


def _demote(value: Any) -> Element:
    """Collapse constant polynomials and integral fractions to scalars."""
    if isinstance(value, Poly) and len(value.coeffs) <= 1:
        return value.coeffs[0] if value.coeffs else 0
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    if not is_element(value):
        raise TypeError(f"unsupported coefficient type {type(value).__name__}")
    return value


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever ``k < 0``, ``k > n`` or ``n < 0``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


class Poly:
    """Dense univariate polynomial, coefficients in ascending degree."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Any] = (), var: str = "x"):
        if var not in RANKS:
            raise VariableMismatchError(f"unknown variable tag {var!r}")
        terms = [_demote(c) for c in coeffs]
        while terms and terms[-1] == 0:
            terms.pop()
        for c in terms:
            if rank(c) >= RANKS[var]:
                raise VariableMismatchError(f"coefficient in {c.var} cannot sit inside a polynomial in {var}")
        self.coeffs: Tuple[Element, ...] = tuple(terms)
        self.var = var

    @classmethod
    def variable(cls, var: str = "x") -> "Poly":
        return cls([0, 1], var)

    @classmethod
    def monomial(cls, coeff: Any, exponent: int, var: str = "x") -> "Poly":
        if exponent < 0:
            raise VariableMismatchError("negative exponent needs a Laurent polynomial")
        return cls([0] * exponent + [coeff], var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Element:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> Element:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def items(self) -> Iterator[Tuple[int, Element]]:
        return iter(enumerate(self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Poly) and other.var == self.var:
            return self.coeffs == other.coeffs
        if not is_element(other):
            return NotImplemented
        if isinstance(other, Laurent) and other.var == self.var:
            return other == self
        if rank(other) < RANKS[self.var]:
            return len(self.coeffs) <= 1 and self[0] == other
        if rank(other) > RANKS[self.var]:
            return other == self
        return False

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self[0])
        return hash((self.var, self.coeffs))

    def __add__(self, other: Any) -> "Poly":
        if isinstance(other, Poly) and other.var == self.var:
            size = max(len(self.coeffs), len(other.coeffs))
            return Poly([self[i] + other[i] for i in range(size)], self.var)
        if is_element(other) and rank(other) < RANKS[self.var]:
            return Poly([self[0] + other, *self.coeffs[1:]], self.var)
        if is_element(other):
            return other + self
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other: Any) -> "Poly":
        if not is_element(other):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "Poly":
        if not is_element(other):
            return NotImplemented
        return (-self) + other

    def __mul__(self, other: Any) -> "Poly":
        if isinstance(other, Poly) and other.var == self.var:
            if not self.coeffs or not other.coeffs:
                return Poly((), self.var)
            out: list = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Poly(out, self.var)
        if is_element(other) and rank(other) < RANKS[self.var]:
            return Poly([c * other for c in self.coeffs], self.var)
        if is_element(other):
            return other * self
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise VariableMismatchError("negative powers of a polynomial are not polynomials")
        result = Poly([1], self.var)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __call__(self, value: Any) -> Element:
        return subs(self, self.var, value)

    def map(self, fn: Callable[[Element], Any]) -> "Poly":
        return Poly([fn(c) for c in self.coeffs], self.var)

    def reflect(self) -> "Poly":
        """Substitute ``var -> -var``."""
        return Poly([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)], self.var)

    def shift(self, exponent: int) -> "Poly":
        """Multiply by ``var**exponent``."""
        return Poly([0] * exponent + list(self.coeffs), self.var)

    def truncate(self, order: int) -> "Poly":
        return Poly(self.coeffs[: order + 1], self.var)

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def to_text(self) -> str:
        return to_text(self)

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r}, {self.var!r})"


def laurent(coeffs: Iterable[Any], minexp: int, var: str = "z") -> Union["Laurent", Poly]:
    """Build a Laurent polynomial, returning a ``Poly`` when no exponent is negative."""
    value = Laurent(coeffs, minexp, var)
    if value.minexp >= 0:
        return Poly([0] * value.minexp + list(value.coeffs), var)
    return value


class Laurent:
    """Laurent polynomial ``sum(coeffs[i] * var**(minexp + i))``."""

    __slots__ = ("coeffs", "minexp", "var")

    def __init__(self, coeffs: Iterable[Any], minexp: int, var: str = "z"):
        if var not in RANKS:
            raise VariableMismatchError(f"unknown variable tag {var!r}")
        terms = [_demote(c) for c in coeffs]
        while terms and terms[-1] == 0:
            terms.pop()
        start = 0
        while start < len(terms) and terms[start] == 0:
            start += 1
        terms = terms[start:]
        for c in terms:
            if rank(c) >= RANKS[var]:
                raise VariableMismatchError(f"coefficient in {c.var} cannot sit inside a polynomial in {var}")
        self.coeffs: Tuple[Element, ...] = tuple(terms)
        self.minexp = minexp + start if terms else 0
        self.var = var

    @classmethod
    def monomial(cls, coeff: Any, exponent: int, var: str = "z") -> Union["Laurent", Poly]:
        return laurent([coeff], exponent, var)

    @property
    def maxexp(self) -> int:
        return self.minexp + len(self.coeffs) - 1

    def __getitem__(self, exponent: int) -> Element:
        i = exponent - self.minexp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def items(self) -> Iterator[Tuple[int, Element]]:
        return ((self.minexp + i, c) for i, c in enumerate(self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _lift(self, other: Any) -> Optional["Laurent"]:
        if isinstance(other, Laurent) and other.var == self.var:
            return other
        if isinstance(other, Poly) and other.var == self.var:
            return Laurent(other.coeffs, 0, self.var)
        if is_element(other) and rank(other) < RANKS[self.var]:
            return Laurent([other], 0, self.var)
        return None

    def __eq__(self, other: Any) -> bool:
        lifted = self._lift(other)
        if lifted is None:
            if is_element(other) and rank(other) > RANKS[self.var]:
                return other == self
            return NotImplemented
        return self.minexp == lifted.minexp and self.coeffs == lifted.coeffs

    def __hash__(self) -> int:
        return hash((self.var, self.minexp, self.coeffs))

    def __add__(self, other: Any) -> Union["Laurent", Poly]:
        lifted = self._lift(other)
        if lifted is None:
            if is_element(other) and rank(other) > RANKS[self.var]:
                return other + self
            return NotImplemented
        low = min(self.minexp, lifted.minexp)
        high = max(self.maxexp, lifted.maxexp)
        return laurent([self[e] + lifted[e] for e in range(low, high + 1)], low, self.var)

    __radd__ = __add__

    def __neg__(self) -> "Laurent":
        return Laurent([-c for c in self.coeffs], self.minexp, self.var)

    def __sub__(self, other: Any) -> Union["Laurent", Poly]:
        if not is_element(other):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> Union["Laurent", Poly]:
        if not is_element(other):
            return NotImplemented
        return (-self) + other

    def __mul__(self, other: Any) -> Union["Laurent", Poly]:
        lifted = self._lift(other)
        if lifted is None:
            if is_element(other) and rank(other) > RANKS[self.var]:
                return other * self
            return NotImplemented
        if not self.coeffs or not lifted.coeffs:
            return Poly((), self.var)
        out: list = [0] * (len(self.coeffs) + len(lifted.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(lifted.coeffs):
                out[i + j] = out[i + j] + a * b
        return laurent(out, self.minexp + lifted.minexp, self.var)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Union["Laurent", Poly]:
        if exponent < 0:
            inverse = unit_inverse(self)
            if inverse is None:
                raise InexactDivisionError(f"{to_text(self)} is not a unit")
            return inverse**-exponent
        result: Union[Laurent, Poly] = Poly([1], self.var)
        for _ in range(exponent):
            result = result * self
        return result

    def map(self, fn: Callable[[Element], Any]) -> Union["Laurent", Poly]:
        return laurent([fn(c) for c in self.coeffs], self.minexp, self.var)

    def to_text(self) -> str:
        return to_text(self)

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"Laurent({list(self.coeffs)!r}, {self.minexp}, {self.var!r})"


def variable(var: str) -> Poly:
    return Poly.variable(var)


def coeff(value: Any, var: str, exponent: int) -> Element:
    """Coefficient of ``var**exponent`` in ``value``, viewed as a polynomial in ``var``."""
    if rank(value) < RANKS[var]:
        return value if exponent == 0 else 0
    if value.var == var:
        return value[exponent]
    return value.map(lambda c: coeff(c, var, exponent))


def degree_in(value: Any, var: str) -> int:
    """Largest exponent of ``var`` occurring in ``value``; ``-1`` for zero."""
    if value == 0:
        return -1
    if rank(value) < RANKS[var]:
        return 0
    if value.var == var:
        return value.maxexp if isinstance(value, Laurent) else value.degree
    return max(degree_in(c, var) for _, c in value.items())


def min_exponent(value: Any, var: str) -> int:
    """Smallest exponent of ``var`` occurring in ``value``, never above zero."""
    if value == 0 or rank(value) < RANKS[var]:
        return 0
    if value.var == var:
        return min(0, value.minexp) if isinstance(value, Laurent) else 0
    return min(min_exponent(c, var) for _, c in value.items())


def variables(value: Any) -> frozenset:
    if rank(value) < 0:
        return frozenset()
    inner = frozenset().union(*(variables(c) for _, c in value.items())) if value else frozenset()
    return inner | {value.var}


def subs(value: Any, var: str, replacement: Any) -> Element:
    """Substitute ``replacement`` for ``var`` everywhere inside ``value``."""
    if rank(value) < RANKS[var]:
        return value
    if value.var != var:
        result: Any = 0
        for e, c in value.items():
            result = result + subs(c, var, replacement) * _power(variable(value.var), e)
        return result
    result = 0
    for e, c in value.items():
        result = result + c * _power(replacement, e)
    return result


def _power(base: Any, exponent: int) -> Element:
    if exponent >= 0:
        return base**exponent
    inverse = unit_inverse(base)
    if inverse is None:
        raise InexactDivisionError(f"cannot raise {to_text(base)} to a negative power")
    return inverse**-exponent


def unit_inverse(value: Any) -> Optional[Element]:
    """Multiplicative inverse when ``value`` is a unit of its ring, else ``None``."""
    if isinstance(value, Fraction):
        return 1 / value if value else None
    if isinstance(value, int):
        return value if value in (1, -1) else None
    terms = [(e, c) for e, c in value.items()]
    if len(terms) != 1:
        return None
    exponent, c = terms[0]
    inner = unit_inverse(c)
    if inner is None:
        return None
    if exponent != 0 and not isinstance(value, Laurent) and value.var != "z":
        return None
    return Laurent.monomial(inner, -exponent, value.var)


def _split(value: Union[Poly, Laurent]) -> Tuple[Poly, int]:
    if isinstance(value, Laurent):
        return Poly(value.coeffs, value.var), value.minexp
    return value, 0


def _poly_div(a: Poly, b: Poly) -> Poly:
    db = b.degree
    if a.degree < db:
        raise InexactDivisionError(f"{to_text(b)} does not divide {to_text(a)}")
    rem = list(a.coeffs)
    out: list = [0] * (a.degree - db + 1)
    for i in range(a.degree, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        quotient = exact_div(c, b.lead)
        out[i - db] = quotient
        for j, bc in enumerate(b.coeffs):
            rem[i - db + j] = rem[i - db + j] - quotient * bc
    if any(r != 0 for r in rem):
        raise InexactDivisionError(f"{to_text(b)} does not divide {to_text(a)}")
    return Poly(out, a.var)


def exact_div(a: Any, b: Any) -> Element:
    """Quotient ``a / b`` that must lie in the ring of ``a``."""
    if b == 0:
        raise InexactDivisionError("division by zero")
    if a == 0:
        return 0
    ra, rb = rank(a), rank(b)
    if rb < 0:
        if ra < 0:
            if isinstance(a, Fraction) or isinstance(b, Fraction):
                return _demote(Fraction(a) / b)
            quotient, remainder = divmod(a, b)
            if remainder:
                raise InexactDivisionError(f"{b} does not divide {a}")
            return quotient
        return a.map(lambda c: exact_div(c, b))
    if rb > ra:
        raise InexactDivisionError(f"{to_text(b)} does not divide {to_text(a)}")
    if rb < ra:
        return a.map(lambda c: exact_div(c, b))
    if isinstance(a, Laurent) or isinstance(b, Laurent):
        pa, sa = _split(a)
        pb, sb = _split(b)
        return _poly_div(pa, pb) * Laurent.monomial(1, sa - sb, a.var)
    return _poly_div(a, b)


def poly_arith(a: Any, b: Any, op: str) -> Element:
    """Strict add/sub/mul: both operands must carry the same variable tags."""
    if op not in ("add", "sub", "mul"):
        raise ValueError(f"unknown operation {op!r}")
    if rank(a) >= 0 and rank(b) >= 0:
        if a.var != b.var:
            raise VariableMismatchError(f"cannot combine a polynomial in {a.var} with one in {b.var}")
        inner_a, inner_b = variables(a) - {a.var}, variables(b) - {b.var}
        if inner_a and inner_b and inner_a != inner_b:
            raise VariableMismatchError(f"inner variables differ: {sorted(inner_a)} vs {sorted(inner_b)}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    return a * b


def to_text(value: Any, compact: bool = False) -> str:
    """Canonical text form: ascending powers with explicit ``*`` and ``^``.

    Nested coefficients are parenthesized per outer power, as in
    ``(1) + (1+t)*x^2``.
    """
    if rank(value) < 0:
        return str(value)
    terms = [(e, c) for e, c in value.items() if c != 0]
    if not terms:
        return "0"
    nested = any(rank(c) >= 0 for _, c in terms)
    plus, minus = ("+", "-") if compact else (" + ", " - ")
    parts = []
    for idx, (e, c) in enumerate(terms):
        mono = "" if e == 0 else (value.var if e == 1 else f"{value.var}^{e}")
        negative = False
        if nested:
            body = f"({to_text(c, compact=True)})"
            if mono:
                body = f"{body}*{mono}"
        else:
            negative = c < 0
            magnitude = -c if negative else c
            if not mono:
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
        if idx == 0:
            parts.append(("-" if negative else "") + body)
        else:
            parts.append((minus if negative else plus) + body)
    return "".join(parts)


X = Poly.variable("x")
T = Poly.variable("t")
Z = Poly.variable("z")
Q = Poly.variable("q")
S = Poly.variable("s")
Y = Poly.variable("y")
