"""q-Suite Node: q-analogues and their q -> 1 specializations."""

from datetime import datetime

from loguru import logger

from stripcomb.models.state import VerifyState
from stripcomb.qseries.identities import Q_IDENTITIES, q_suite

from .runner import run_tasks

SUITES = ("q", "all")


async def q_suite_node(state: VerifyState) -> VerifyState:
    logger.info("Executing q-Suite Node")
    state.setdefault("errors", [])
    state.setdefault("reports", [])
    if state.get("suite", "all") not in SUITES:
        logger.debug(f"Suite {state.get('suite')} does not include q-identities")
        return state
    try:
        logger.debug(f"Checking {len(Q_IDENTITIES)} q-identities with n <= {state.get('nmax')}")
        tasks = [("q_suite", q_suite, {"n_max": state.get("nmax")})]
        reports = await run_tasks("q_suite_node", tasks, state)
        state["reports"].extend(reports)
        logger.info(f"q-suite produced {len(reports)} reports")
    except Exception as e:
        state["errors"].append({"node": "q_suite_node", "error": str(e), "timestamp": datetime.now()})
    return state
