"""Conjecture Suite Node: coefficient conjectures, the z-graded families and the OEIS prefixes."""

from datetime import datetime
from typing import List

from loguru import logger

from stripcomb.genfun.conjectures import eulerian_reduction_check, vj_property_check, vj_z_pipeline
from stripcomb.genfun.zfamily import z_family_check
from stripcomb.models.state import VerifyState
from stripcomb.oeis.client import OeisClient, oeis_suite_check

from .runner import Task, run_tasks

SUITES = ("conjectures", "all")
Z_STRIP_MAX = 5
OEIS_PREFIX = 20


def z_family_cells(strip_max: int = Z_STRIP_MAX) -> List[tuple]:
    """Admissible ``(strip, family)`` pairs up to ``strip_max``."""
    cells = []
    for strip in range(1, strip_max + 1):
        cells += [(strip, which) for which in ("conj4", "conj5", "prop5")]
        cells.append((strip, "prop5_z1_odd" if strip % 2 else "prop5_z1_even"))
    return cells


def conjecture_tasks(state: VerifyState) -> List[Task]:
    jmax, kmax = state.get("jmax", 3), state.get("kmax", 4)
    config = state.get("config", {})
    tasks: List[Task] = [("conjecture1", vj_property_check, {"j_max": jmax, "k_max": kmax})]
    tasks += [(f"conjecture2:{j}", vj_z_pipeline, {"j": j}) for j in range(1, jmax + 1)]
    tasks.append(("eulerian_reduction", eulerian_reduction_check, {"j_max": max(jmax, 5)}))
    tasks += [
        (f"z_family:{which}:{strip}", z_family_check, {"strip": strip, "which": which})
        for strip, which in z_family_cells()
    ]
    client = OeisClient(cache_dir=config.get("cache_dir"), online=False)
    tasks.append(("oeis", oeis_suite_check, {"prefix_len": OEIS_PREFIX, "client": client}))
    return tasks


async def conjecture_suite_node(state: VerifyState) -> VerifyState:
    """Run the conjecture suite when it is selected."""
    logger.info("Executing Conjecture Suite Node")
    state.setdefault("errors", [])
    state.setdefault("reports", [])
    if state.get("suite", "all") not in SUITES:
        logger.debug(f"Suite {state.get('suite')} does not include conjectures")
        return state
    try:
        reports = await run_tasks("conjecture_suite_node", conjecture_tasks(state), state)
        state["reports"].extend(reports)
        logger.info(f"Conjecture suite produced {len(reports)} reports")
    except Exception as e:
        state["errors"].append({"node": "conjecture_suite_node", "error": str(e), "timestamp": datetime.now()})
    return state
