"""Generating functions, Hankel determinants, recurrence guessing and the coefficient conjectures."""

from .builders import (
    continued_fraction_gf,
    corridor_series_check,
    corridor_cd,
    decomposition_gf,
    dyck_gf,
    dyck_series_check,
    gf_corridor_t,
    gf_numbers,
    gf_weighted,
    numbers_series_check,
    rational_identities_check,
    series_check,
    stability_check,
    denominator_first_terms_check,
    weighted_series_check,
)
from .conjectures import (
    NOT_POLYNOMIAL,
    eulerian_reduction_check,
    extract_vj,
    v2_closed_form,
    v3_coefficient_report,
    vj_k_recurrence_report,
    vj_property_check,
    vj_recurrence_rows,
    vj_z_pipeline,
)
from .guess import guess_cfinite, guess_denominator_check
from .hankel import annihilate_check, hankel_char_poly, hankel_central_binomial_check, shift_apply
from .zfamily import FAMILIES, gf_z, z_family_check

__all__ = [
    "continued_fraction_gf",
    "corridor_cd",
    "decomposition_gf",
    "dyck_gf",
    "gf_corridor_t",
    "gf_numbers",
    "gf_weighted",
    "series_check",
    "stability_check",
    "denominator_first_terms_check",
    "weighted_series_check",
    "numbers_series_check",
    "rational_identities_check",
    "corridor_series_check",
    "dyck_series_check",
    "NOT_POLYNOMIAL",
    "eulerian_reduction_check",
    "extract_vj",
    "v2_closed_form",
    "v3_coefficient_report",
    "vj_k_recurrence_report",
    "vj_property_check",
    "vj_recurrence_rows",
    "vj_z_pipeline",
    "guess_cfinite",
    "guess_denominator_check",
    "annihilate_check",
    "hankel_char_poly",
    "hankel_central_binomial_check",
    "shift_apply",
    "FAMILIES",
    "gf_z",
    "z_family_check",
]
