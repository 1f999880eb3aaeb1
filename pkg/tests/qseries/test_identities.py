"""Tests for the q-identity registry."""

import pytest

from stripcomb.errors import UnknownIdentityError
from stripcomb.exactmath.poly import Q
from stripcomb.qseries import (
    Q_EQUATION_IDS,
    Q_IDENTITIES,
    cj_inference_check,
    infer_cj,
    q_identity_check,
    q_to_one_check,
)
from stripcomb.qseries.identities import schur_left, schur_right


def test_schur_small_case():
    """Test both sides of the Schur polynomial identity for n = 2."""
    assert schur_left(2) == 1 + Q
    assert schur_right(2) == 1 + Q
    assert q_identity_check("q:schur_fibonacci", {"n": 2}).passed


@pytest.mark.parametrize("identity_id", sorted(Q_IDENTITIES))
def test_registered_q_identity_holds(identity_id):
    """Test every registered q-identity over its declared range."""
    report = q_identity_check(identity_id)
    assert report.passed, report.witness


@pytest.mark.parametrize("identity_id", sorted(i for i, d in Q_IDENTITIES.items() if d.classical))
def test_q_to_one(identity_id):
    """Test that q = 1 recovers the classical identity."""
    report = q_to_one_check(identity_id)
    assert report.passed, report.witness


def test_unknown_q_identity():
    """Test that an unregistered id raises."""
    with pytest.raises(UnknownIdentityError):
        q_identity_check("q:nothing")
    with pytest.raises(UnknownIdentityError):
        q_to_one_check("q:nothing")


def test_inferred_exponent():
    """Test c_j = j*l on a small grid."""
    assert infer_cj(2, 1, 2) == 2
    assert infer_cj(3, 2, 3) == 6
    report = cj_inference_check(j_max=3, k_max=3)
    assert report.passed
    assert report.details["formula"] == "c_j = j*l"


@pytest.mark.parametrize("equation_id", sorted(Q_EQUATION_IDS))
def test_q_equation_ids_resolve(equation_id):
    """Test that every q equation id names a registered q-identity."""
    assert Q_EQUATION_IDS[equation_id] in Q_IDENTITIES


def test_schur_by_equation_id():
    """Test eq1.6 with and without the q: prefix."""
    assert q_identity_check("q:eq1.6", {"n": 2}).passed
    assert q_identity_check("eq1.6", {"n": 2}).passed
    assert q_to_one_check("q:eq1.6").passed


def test_square_binomial_by_equation_id():
    """Test eq2.54 at k = 3."""
    report = q_identity_check("eq2.54", {"k": 3})
    assert report.passed
    assert report.id == "q:square_binomial_expansion"
