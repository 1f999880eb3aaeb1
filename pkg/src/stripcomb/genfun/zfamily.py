"""Generating functions of the z-graded polynomials a(n,k,t,z) and their specializations."""

from typing import Any, Tuple

from stripcomb.classic.families import fib_at, lambda_poly, lucas_at, phi_poly
from stripcomb.errors import ParameterRangeError
from stripcomb.exactmath.poly import T, X, Z, laurent, subs
from stripcomb.exactmath.series import RatFunc
from stripcomb.formulas import a_poly_z, a_z_laurent
from stripcomb.genfun.builders import even_strip_parts, odd_strip_parts, series_check
from stripcomb.models.genfun import NamedGF
from stripcomb.models.report import ConjectureReport

FAMILIES = ("conj4", "conj5", "prop5", "prop5_z1_even", "prop5_z1_odd")

# (1+z)^2/z and z + 1/z as Laurent polynomials in z
_SQUARE_OVER_Z = laurent([1, 2, 1], -1, "z")
_Z_PLUS_INVERSE = laurent([1, 0, 1], -1, "z")


def _conj4(strip: int) -> Tuple[Any, Any]:
    half = strip // 2
    if strip % 2:
        num_odd, den_odd = odd_strip_parts(half)
        factor = (1 + X) ** 2 - T * X**2
        c = factor * den_odd * num_odd + T * (1 + Z) * X ** (2 * half + 2)
        d = factor * den_odd**2 - T * _SQUARE_OVER_Z * X ** (2 * half + 3)
        return c, d
    num_even, den_even = even_strip_parts(half)
    c = den_even * num_even + T * (1 + Z) * X ** (2 * half + 1)
    d = den_even**2 - T * _SQUARE_OVER_Z * X ** (2 * half + 2)
    return c, d


def _conj5(strip: int) -> Tuple[Any, Any]:
    half = strip // 2
    if strip % 2:
        num = lambda_poly(half + 1) - (1 - T) * X**2 * lambda_poly(half)
        den = (1 - X) * lambda_poly(half + 1) - X**2 * (1 - (1 - T) * X) * lambda_poly(half)
        return num, den
    num = (1 - X) * phi_poly(half) - X**2 * (1 - (1 - T) * X) * phi_poly(half - 1)
    den = ((1 - X) ** 2 - T * X**2) * (phi_poly(half) - X**2 * phi_poly(half - 1))
    return num, den


def _prop5(k: int) -> Tuple[Any, Any]:
    num = fib_at(k + 2) + X * fib_at(k + 1) + Z * X ** (k + 1)
    den = lucas_at(k + 2) - X ** (k + 2) * _Z_PLUS_INVERSE
    return num, den


def gf_z(strip: int, which: str) -> NamedGF:
    """Generating function of the z-graded family ``which`` for the given strip.

    ``conj4`` is over Z[t, z, 1/z], ``conj5`` is the z = 1 form over Z[t],
    ``prop5`` is the t = 1 form over Z[z, 1/z] and the ``prop5_z1_*`` forms are
    the t = z = 1 numbers for even and odd strips.
    """
    if which not in FAMILIES:
        raise ParameterRangeError(f"unknown z-family {which!r}, expected one of {', '.join(FAMILIES)}")
    if strip < 0 or (strip == 0 and which in ("conj4", "conj5")):
        raise ParameterRangeError(f"{which} is not defined for strip {strip}")
    half = strip // 2
    if which == "conj4":
        num, den = _conj4(strip)
        ring = "Z[t,z,1/z]"
    elif which == "conj5":
        num, den = _conj5(strip)
        ring = "Z[t]"
    elif which == "prop5":
        num, den = _prop5(strip)
        ring = "Z[z,1/z]"
    elif which == "prop5_z1_even":
        if strip % 2:
            raise ParameterRangeError(f"prop5_z1_even needs an even strip, got {strip}")
        num, den = fib_at(half + 1) - X * fib_at(half), (1 - 2 * X) * fib_at(half + 1)
        ring = "Z"
    else:
        if strip % 2 == 0:
            raise ParameterRangeError(f"prop5_z1_odd needs an odd strip, got {strip}")
        num, den = lucas_at(half + 1), lucas_at(half + 2) - X * lucas_at(half + 1)
        ring = "Z"
    return NamedGF(f"{which}:{strip}", RatFunc(num, den).normalized(), ring)


def z_oracle(strip: int, which: str):
    """Coefficient oracle for :func:`gf_z`, computed from the double binomial sums."""
    if which == "conj4":
        return lambda n: a_poly_z(n, strip)
    if which == "conj5":
        return lambda n: subs(a_poly_z(n, strip), "z", 1)
    if which == "prop5":
        return lambda n: a_z_laurent(n, strip)
    return lambda n: subs(a_z_laurent(n, strip), "z", 1)


def z_family_check(strip: int, which: str, order: int = 24) -> ConjectureReport:
    """Series of ``gf_z(strip, which)`` against the double binomial sums up to ``order``."""
    report = series_check(gf_z(strip, which), z_oracle(strip, which), order)
    report.grid = {"strip": strip, **report.grid}
    return report
