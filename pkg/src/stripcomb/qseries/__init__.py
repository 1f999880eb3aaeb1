"""Polynomial q-arithmetic and the q-identity registry."""

from .identities import (
    Q_EQUATION_IDS,
    Q_IDENTITIES,
    cj_inference_check,
    infer_cj,
    q_identity_check,
    q_suite,
    q_to_one_check,
    resolve_q_identity,
)
from .qpoly import (
    q_derivative,
    q_divided_derivative,
    q_factorial,
    q_int,
    qbinom,
    qpochhammer,
)

__all__ = [
    "Q_EQUATION_IDS",
    "Q_IDENTITIES",
    "cj_inference_check",
    "infer_cj",
    "q_identity_check",
    "q_suite",
    "q_to_one_check",
    "resolve_q_identity",
    "q_derivative",
    "q_divided_derivative",
    "q_factorial",
    "q_int",
    "qbinom",
    "qpochhammer",
]
