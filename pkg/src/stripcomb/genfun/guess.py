"""Guessing constant-coefficient recurrences from sequence prefixes."""

from fractions import Fraction
from typing import Any, List, Optional, Sequence

from loguru import logger

from stripcomb.errors import InexactDivisionError, InsufficientDataError, ParameterRangeError
from stripcomb.exactmath.matrix import ExactMatrix, SolveStatus, det_exact, solve_linear_exact
from stripcomb.exactmath.poly import Poly, exact_div, is_scalar
from stripcomb.formulas import a_count
from stripcomb.models.genfun import Recurrence
from stripcomb.models.report import ConjectureReport, check_grid

from .builders import gf_numbers
from .hankel import validity_index

HELD_OUT = 4


def _integral(value: Any) -> Any:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


def _system(seq: Sequence[Any], order: int, offset: int):
    """Rows ``a(n+m-1), ..., a(n)`` and right sides ``-a(n+m)`` for the first ``order`` indices n."""
    rows = [[seq[n + order - i] for i in range(1, order + 1)] for n in range(offset, offset + order)]
    rhs = [-seq[n + order] for n in range(offset, offset + order)]
    return rows, rhs


def _solve_rational(seq: Sequence[Any], order: int, offset: int) -> Optional[Recurrence]:
    rows, rhs = _system(seq, order, offset)
    solution = solve_linear_exact(ExactMatrix.from_rows(rows), rhs)
    if solution.status != SolveStatus.UNIQUE:
        logger.debug(f"Order {order}: linear system is {solution.status.value}")
        return None
    return Recurrence(order, tuple(_integral(v) for v in solution.values), offset)


def _solve_cramer(seq: Sequence[Any], order: int, offset: int) -> Optional[Recurrence]:
    """Cramer's rule with fraction-free determinants, for sequences of polynomials."""
    rows, rhs = _system(seq, order, offset)
    leading = det_exact(ExactMatrix.from_rows(rows))
    if leading == 0:
        logger.debug(f"Order {order}: Hankel determinant vanishes")
        return None
    coefficients: List[Any] = []
    for col in range(order):
        replaced = [row[:col] + [r] + row[col + 1 :] for row, r in zip(rows, rhs)]
        coefficients.append(det_exact(ExactMatrix.from_rows(replaced)))
    try:
        coefficients = [exact_div(c, leading) for c in coefficients]
        leading = 1
    except InexactDivisionError:
        logger.debug(f"Order {order}: keeping leading coefficient {leading}")
    return Recurrence(order, tuple(coefficients), offset, leading)


def guess_cfinite(seq: Sequence[Any], max_order: int, validity_offset: int = 0) -> Optional[Recurrence]:
    """Smallest-order recurrence ``c0 a(n+m) + d1 a(n+m-1) + ... + dm a(n) = 0`` valid from ``validity_offset``.

    The coefficients are fitted on the first ``m`` relations and must hold on
    every later term; at least four of those are held out. Returns ``None``
    when no order up to ``max_order`` fits.
    """
    if max_order < 1:
        raise ParameterRangeError(f"max_order must be at least 1, got {max_order}")
    if validity_offset < 0:
        raise ParameterRangeError(f"validity offset must be nonnegative, got {validity_offset}")
    usable = len(seq) - validity_offset
    if usable < 2 * max_order + HELD_OUT:
        raise InsufficientDataError(
            f"order {max_order} from offset {validity_offset} needs {2 * max_order + HELD_OUT} terms, got {usable}"
        )
    symbolic = any(not is_scalar(a) for a in seq)
    for order in range(1, max_order + 1):
        fit = (_solve_cramer if symbolic else _solve_rational)(seq, order, validity_offset)
        if fit is not None and fit.holds_on(seq):
            logger.debug(f"Found recurrence: {fit.to_text()}")
            return fit
    logger.debug(f"No recurrence of order <= {max_order} from offset {validity_offset}")
    return None


def characteristic_poly(recurrence: Recurrence) -> Poly:
    """Reciprocal characteristic polynomial, with integral rational coefficients made integers."""
    return recurrence.characteristic_poly().map(_integral)


def guess_denominator_check(k_max: int = 6) -> ConjectureReport:
    """Guess from ``3k+10`` terms of ``a(n,2k)`` and ``a(n,2k+1)``; the result must divide the known denominator."""
    cells = ({"k": k, "strip": strip} for k in range(1, k_max + 1) for strip in (2 * k, 2 * k + 1))

    def check(cell):
        k, strip = cell["k"], cell["strip"]
        den = gf_numbers(strip).den
        seq = [a_count(n, strip) for n in range(3 * k + 10)]
        fit = guess_cfinite(seq, den.degree, validity_index(strip, den))
        if fit is None:
            return {"expected": den, "actual": None}
        guessed = characteristic_poly(fit)
        try:
            exact_div(den, guessed)
        except InexactDivisionError:
            return {"expected": den, "actual": guessed}
        return None

    return check_grid("guess_denominators", {"k": [1, k_max]}, cells, check)
