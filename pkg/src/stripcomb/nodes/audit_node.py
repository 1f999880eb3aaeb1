"""Audit Node: report-only readings of ambiguous printed statements."""

from datetime import datetime
from typing import Any, Dict

from loguru import logger

from stripcomb.formulas import two_reading_audit
from stripcomb.genfun.conjectures import v3_coefficient_report, vj_k_recurrence_report
from stripcomb.genfun.hankel import annihilate_check
from stripcomb.models.report import ConjectureReport, Status
from stripcomb.models.state import VerifyState


def collect_audits(n_max: int = 12, k_max: int = 5) -> Dict[str, Dict[str, Any]]:
    """Each audit maps a reading to its verdict; none of them decides the exit code."""
    return {
        "two_reading": two_reading_audit(n_max, k_max),
        "annihilator_literal": {str(k): annihilate_check(k).details["literal_reading"] for k in range(1, k_max + 1)},
        "vj_recurrences": vj_k_recurrence_report(4),
        "v3_coefficients": v3_coefficient_report(4),
    }


async def audit_node(state: VerifyState) -> VerifyState:
    logger.info("Executing Audit Node")
    state.setdefault("errors", [])
    state.setdefault("reports", [])
    try:
        audits = collect_audits()
        state["audits"] = audits
        for name, verdict in audits.items():
            grid = {"audit": name}
            state["reports"].append(
                ConjectureReport(f"audit:{name}", grid, Status.VERIFIED_UP_TO, checked_upto=grid, details=verdict)
            )
        holds = {name: v["holds"] for name, v in audits["two_reading"].items()}
        logger.info(f"Two-reading audit: {holds}")
    except Exception as e:
        state["errors"].append({"node": "audit_node", "error": str(e), "timestamp": datetime.now()})
    return state
