"""Classical sequences, polynomial families and the identity registry."""

from .families import PolyFamilyCache, fib_at, fib_poly, lambda_poly, lucas_at, lucas_poly, phi_poly
from .identities import EQUATION_IDS, IDENTITIES, identity, identity_check, resolve_identity, run_identity
from .numbers import catalan, eulerian, eulerian_row, narayana, r_poly, r_poly_narayana
from .roots import claimed_roots, factorization_check_float

__all__ = [
    "PolyFamilyCache",
    "fib_at",
    "fib_poly",
    "lambda_poly",
    "lucas_at",
    "lucas_poly",
    "phi_poly",
    "EQUATION_IDS",
    "IDENTITIES",
    "identity",
    "identity_check",
    "resolve_identity",
    "run_identity",
    "catalan",
    "eulerian",
    "eulerian_row",
    "narayana",
    "r_poly",
    "r_poly_narayana",
    "claimed_roots",
    "factorization_check_float",
]
