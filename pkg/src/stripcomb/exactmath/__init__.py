"""Exact arithmetic substrate: polynomials, series and matrices."""

from .matrix import ExactMatrix, LinearSolution, SolveStatus, det_exact, solve_linear_exact
from .poly import Q, S, T, X, Y, Z, Laurent, Poly, binom, coeff, exact_div, laurent, poly_arith, subs, to_text, variable
from .series import RatFunc, TruncSeries, as_poly, ratfunc_series

__all__ = [
    "Q",
    "S",
    "T",
    "X",
    "Y",
    "Z",
    "ExactMatrix",
    "LinearSolution",
    "SolveStatus",
    "det_exact",
    "solve_linear_exact",
    "Laurent",
    "Poly",
    "binom",
    "coeff",
    "exact_div",
    "laurent",
    "poly_arith",
    "subs",
    "to_text",
    "variable",
    "RatFunc",
    "TruncSeries",
    "as_poly",
    "ratfunc_series",
]
