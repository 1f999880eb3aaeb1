"""Summary Node: orders the reports and decides the exit code."""

from datetime import datetime

from loguru import logger

from stripcomb.models.report import Status
from stripcomb.models.state import VerifyState


async def summary_node(state: VerifyState) -> VerifyState:
    logger.info("Executing Summary Node")
    state.setdefault("errors", [])
    try:
        reports = sorted(state.get("reports", []), key=lambda r: r.sort_key())
        state["reports"] = reports
        state["failed"] = [r.id for r in reports if not r.passed]
        skipped = [r.id for r in reports if r.status == Status.SKIPPED]
        for report_id in skipped:
            logger.warning(f"{report_id} checked no cells")
        state["exit_code"] = 1 if state["failed"] or state["errors"] else 0
        logger.info(f"{len(reports)} reports, {len(state['failed'])} failed, {len(skipped)} skipped")
    except Exception as e:
        state["errors"].append({"node": "summary_node", "error": str(e), "timestamp": datetime.now()})
        state["exit_code"] = 1
    return state
