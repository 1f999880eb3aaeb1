"""Hankel determinants, characteristic polynomials and shift-operator annihilators."""

from typing import Any, List, Sequence

from loguru import logger

from stripcomb.classic.families import fib_at, fib_poly, lucas_at, lucas_poly
from stripcomb.errors import InsufficientDataError, ParameterRangeError, SingularMinorError
from stripcomb.exactmath.matrix import ExactMatrix, det_exact
from stripcomb.exactmath.poly import X, Poly, binom
from stripcomb.exactmath.series import as_poly
from stripcomb.formulas import a_count
from stripcomb.genfun.builders import gf_numbers
from stripcomb.models.report import ConjectureReport, Status, check_grid, mismatch


def hankel_matrix(seq: Sequence[Any], m: int) -> ExactMatrix:
    """The ``m x m`` Hankel matrix ``(a(i+j))``."""
    return ExactMatrix.from_rows([[seq[i + j] for j in range(m)] for i in range(m)])


def hankel_char_poly(seq: Sequence[Any], m: int) -> Poly:
    """Determinant of the bordered Hankel matrix whose last column is ``x^m, x^(m-1), ..., 1``.

    Row i holds ``a(i), ..., a(i+m-1)``, so the first ``2m`` terms are used.
    For a sequence satisfying a recurrence of order m this is the reciprocal
    characteristic polynomial.
    """
    if m < 1:
        raise ParameterRangeError(f"order must be at least 1, got {m}")
    if len(seq) < 2 * m:
        raise InsufficientDataError(f"order {m} needs {2 * m} terms, got {len(seq)}")
    if det_exact(hankel_matrix(seq, m)) == 0:
        raise SingularMinorError(f"leading {m}x{m} Hankel determinant vanishes")
    rows = [[seq[i + j] for j in range(m)] + [X ** (m - i)] for i in range(m + 1)]
    return as_poly(det_exact(ExactMatrix.from_rows(rows)))


def central_binomials(count: int) -> List[int]:
    return [binom(n, n // 2) for n in range(count)]


def hankel_inputs(k: int, modified: bool = False) -> List[int]:
    """``C(n, floor(n/2))`` for ``n <= 2k+1``; ``modified`` lowers the last value by one."""
    seq = central_binomials(2 * k + 2)
    if modified:
        seq[-1] -= 1
    return seq


def hankel_central_binomial_check(k_max: int = 5) -> ConjectureReport:
    """Bordered Hankel determinants of the central binomials against both closed forms."""
    cells = ({"variant": v, "k": k} for v in ("odd", "even") for k in range(k_max + 1))

    def check(cell):
        k = cell["k"]
        if cell["variant"] == "odd":
            expected = as_poly(fib_at(k + 2) - X * fib_at(k + 1))
        else:
            expected = as_poly(lucas_at(k + 1))
        return mismatch(expected, hankel_char_poly(hankel_inputs(k, cell["variant"] == "even"), k + 1))

    return check_grid("hankel_central_binomial", {"k": [0, k_max]}, cells, check)


def shift_apply(poly: Any, seq: Sequence[Any], n: int) -> Any:
    """Apply ``poly(E)`` to ``seq`` at index n, with ``E a(n) = a(n+1)``."""
    p = as_poly(poly)
    acc: Any = 0
    for i, c in p.items():
        acc = acc + c * seq[n + i]
    return acc


def annihilators(k: int) -> dict:
    """Shift polynomials paired with the strip they annihilate."""
    return {
        2 * k - 2: lucas_poly(k, X, -1),
        2 * k - 1: fib_poly(k + 1, X, -1) - fib_poly(k, X, -1),
    }


def validity_index(strip: int, poly: Any) -> int:
    """First n from which ``poly(E)`` kills ``a(n, strip)``."""
    return max(0, gf_numbers(strip).num.degree - as_poly(poly).degree + 1)


def annihilate_check(k: int, n_max: int = 25) -> ConjectureReport:
    """``L_k(E,-1)`` on ``a(n,2k-2)`` and ``F_{k+1}(E,-1) - F_k(E,-1)`` on ``a(n,2k-1)``.

    The reading that pairs ``L_k(E,-1)`` with ``a(n,2k)`` is evaluated too and
    recorded under ``details`` without affecting the status.
    """
    if k < 1:
        raise ParameterRangeError(f"annihilate_check needs k >= 1, got {k}")
    pairs = annihilators(k)
    cells = []
    for strip, poly in pairs.items():
        start = validity_index(strip, poly)
        cells += [{"strip": strip, "n": n} for n in range(start, n_max + 1)]
    span = n_max + as_poly(lucas_poly(k + 1, X, -1)).degree + 1
    sequences = {strip: [a_count(n, strip) for n in range(span)] for strip in (*pairs, 2 * k)}

    def check(cell):
        return mismatch(0, shift_apply(pairs[cell["strip"]], sequences[cell["strip"]], cell["n"]))

    report = check_grid(f"annihilate:{k}", {"k": k, "n": [0, n_max]}, cells, check)

    literal = lucas_poly(k, X, -1)
    residuals = [shift_apply(literal, sequences[2 * k], n) for n in range(n_max + 1)]
    failure = next(((n, r) for n, r in enumerate(residuals) if r != 0), None)
    report.details["literal_reading"] = {
        "statement": f"L_{k}(E,-1) a(n,{2 * k}) = 0",
        "holds": failure is None,
        "first_failure": None if failure is None else {"n": failure[0], "residual": failure[1]},
    }
    if failure is not None:
        logger.debug(f"Literal annihilator reading fails for k={k} at n={failure[0]}")
    if report.status == Status.SKIPPED:
        logger.warning(f"Annihilator check for k={k} had no cells")
    return report
