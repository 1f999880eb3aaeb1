"""Identity Suite Node: classical identities, closed forms against the enumerators, generating functions."""

from datetime import datetime
from typing import List

from loguru import logger

from stripcomb.classic.identities import IDENTITIES, identity_check
from stripcomb.classic.roots import factorization_check_float
from stripcomb.formulas import (
    closed_forms_check,
    corridor_check,
    count_oracle_check,
    even_strip_doubling_check,
    trig_check,
    up_prefix_check,
    walks_check,
    weight_oracle_check,
)
from stripcomb.genfun.builders import (
    corridor_series_check,
    denominator_first_terms_check,
    dyck_series_check,
    numbers_series_check,
    rational_identities_check,
    stability_check,
    weighted_series_check,
)
from stripcomb.genfun.guess import guess_denominator_check
from stripcomb.genfun.hankel import annihilate_check, hankel_central_binomial_check
from stripcomb.models.state import VerifyState

from .runner import Task, run_tasks

SUITES = ("identities", "all")
GF_K_MAX = 6


def identity_tasks() -> List[Task]:
    tasks: List[Task] = [(f"identity:{id}", identity_check, {"id": id}) for id in IDENTITIES]
    tasks += [
        (f"roots:{family}:{k}", factorization_check_float, {"family": family, "k": k})
        for family in ("F", "L", "F-F")
        for k in range(1, 9)
    ]
    tasks += [
        ("oracle:counts", count_oracle_check, {}),
        ("oracle:weights", weight_oracle_check, {}),
        ("oracle:up_prefix", up_prefix_check, {}),
        ("oracle:even_doubling", even_strip_doubling_check, {}),
        ("closed_forms", closed_forms_check, {}),
        ("walks", walks_check, {}),
        ("walks_trig", trig_check, {}),
        ("corridor", corridor_check, {}),
    ]
    tasks += [(f"series:numbers:{k}", numbers_series_check, {"k": k}) for k in range(GF_K_MAX + 1)]
    tasks += [(f"series:weighted:{s}", weighted_series_check, {"strip": s}) for s in range(1, 2 * GF_K_MAX + 2)]
    tasks += [(f"series:corridor:{k}", corridor_series_check, {"k": k}) for k in range(5)]
    tasks += [(f"series:dyck:{k}", dyck_series_check, {"k": k}) for k in range(GF_K_MAX + 1)]
    tasks += [(f"annihilate:{k}", annihilate_check, {"k": k}) for k in range(1, GF_K_MAX + 1)]
    tasks += [
        ("rational_identities", rational_identities_check, {"k_max": GF_K_MAX}),
        ("denominator_first_terms", denominator_first_terms_check, {"k_max": GF_K_MAX}),
        ("stability", stability_check, {}),
        ("hankel_central_binomial", hankel_central_binomial_check, {}),
        ("guess_denominators", guess_denominator_check, {"k_max": GF_K_MAX}),
    ]
    return tasks


async def identity_suite_node(state: VerifyState) -> VerifyState:
    """Run the identity suite when it is selected."""
    logger.info("Executing Identity Suite Node")
    state.setdefault("errors", [])
    state.setdefault("reports", [])
    if state.get("suite", "all") not in SUITES:
        logger.debug(f"Suite {state.get('suite')} does not include identities")
        return state
    try:
        reports = await run_tasks("identity_suite_node", identity_tasks(), state)
        state["reports"].extend(reports)
        logger.info(f"Identity suite produced {len(reports)} reports")
    except Exception as e:
        state["errors"].append({"node": "identity_suite_node", "error": str(e), "timestamp": datetime.now()})
    return state
