"""Floating-point checks of the cosine factorizations of F, L and F - F at s = -1."""

import time

import numpy as np
from loguru import logger

from stripcomb.classic.families import fib_poly, lucas_poly
from stripcomb.errors import ParameterRangeError
from stripcomb.exactmath.poly import X, Poly
from stripcomb.exactmath.series import as_poly
from stripcomb.models.report import ConjectureReport, Status

TOLERANCE = 1e-9


def _family_poly(family: str, k: int) -> Poly:
    if family == "F":
        return as_poly(fib_poly(k + 1, X, -1))
    if family == "L":
        return as_poly(lucas_poly(k, X, -1))
    if family == "F-F":
        return as_poly(fib_poly(k + 1, X, -1) - fib_poly(k, X, -1))
    raise ParameterRangeError(f"unknown family {family!r}, expected F, L or F-F")


def claimed_roots(family: str, k: int) -> np.ndarray:
    """The k cosine roots claimed for each family."""
    if family == "F":
        return 2 * np.cos(np.arange(1, k + 1) * np.pi / (k + 1))
    if family == "L":
        return 2 * np.cos((2 * np.arange(k) + 1) * np.pi / (2 * k))
    if family == "F-F":
        return 2 * np.cos((2 * np.arange(1, k + 1) - 1) * np.pi / (2 * k + 1))
    raise ParameterRangeError(f"unknown family {family!r}, expected F, L or F-F")


def factorization_check_float(family: str, k: int) -> ConjectureReport:
    """Evaluate the monic degree-k polynomial at each claimed root in double precision."""
    if k < 1:
        raise ParameterRangeError(f"k must be at least 1, got {k}")
    start = time.perf_counter()
    poly = _family_poly(family, k)
    coeffs = np.array([float(c) for c in poly.coeffs])
    roots = claimed_roots(family, k)
    values = np.polynomial.polynomial.polyval(roots, coeffs)
    bound = TOLERANCE * (1 + np.max(np.abs(coeffs)))
    worst = float(np.max(np.abs(values))) if len(values) else 0.0
    grid = {"family": family, "k": k}
    wall_ms = (time.perf_counter() - start) * 1000

    if poly.degree != k or poly.lead != 1:
        witness = {"params": grid, "expected": f"monic of degree {k}", "actual": poly.to_text()}
        return ConjectureReport(f"roots:{family}", grid, Status.COUNTEREXAMPLE, witness=witness, wall_ms=wall_ms)
    if worst >= bound:
        logger.error(f"Root check {family} k={k} failed with residual {worst:.3e}")
        witness = {"params": grid, "expected": f"|p(root)| < {bound:.3e}", "actual": worst}
        return ConjectureReport(f"roots:{family}", grid, Status.COUNTEREXAMPLE, witness=witness, wall_ms=wall_ms)
    logger.debug(f"Root check {family} k={k}: max residual {worst:.3e}")
    return ConjectureReport(
        f"roots:{family}",
        grid,
        Status.VERIFIED_UP_TO,
        checked_upto=grid,
        wall_ms=wall_ms,
        details={"max_residual": worst},
    )
