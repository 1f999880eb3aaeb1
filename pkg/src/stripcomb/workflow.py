"""Verification workflow using LangGraph for orchestration."""

import asyncio
from typing import Any, Dict

from langgraph.graph import END, StateGraph
from loguru import logger

from stripcomb.models.state import VerifyState
from stripcomb.nodes.audit_node import audit_node
from stripcomb.nodes.conjecture_suite_node import conjecture_suite_node
from stripcomb.nodes.identity_suite_node import identity_suite_node
from stripcomb.nodes.q_suite_node import q_suite_node
from stripcomb.nodes.summary_node import summary_node

SUITES = ("identities", "q", "conjectures", "all")


def create_workflow() -> StateGraph:
    """Create the verification graph."""
    workflow = StateGraph(VerifyState)

    # Add nodes
    workflow.add_node("identity_suite_node", identity_suite_node)
    workflow.add_node("q_suite_node", q_suite_node)
    workflow.add_node("conjecture_suite_node", conjecture_suite_node)
    workflow.add_node("audit_node", audit_node)
    workflow.add_node("summary_node", summary_node)

    workflow.set_entry_point("identity_suite_node")

    # Define edges
    workflow.add_edge("identity_suite_node", "q_suite_node")
    workflow.add_edge("q_suite_node", "conjecture_suite_node")
    workflow.add_edge("conjecture_suite_node", "audit_node")
    workflow.add_edge("audit_node", "summary_node")
    workflow.add_edge("summary_node", END)

    return workflow.compile()


def initial_state(config: Dict[str, Any]) -> VerifyState:
    suite = config.get("suite", "all")
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}, expected one of {', '.join(SUITES)}")
    return {
        "suite": suite,
        "jmax": config.get("jmax", 3),
        "kmax": config.get("kmax", 4),
        "nmax": config.get("nmax"),
        "jobs": config.get("jobs", 1),
        "reports": [],
        "config": config,
        "errors": [],
        "warnings": [],
    }


async def run_workflow_async(config: Dict[str, Any]) -> VerifyState:
    """Run the verification workflow asynchronously and return the final state."""
    app = create_workflow()
    final_state = None
    async for state in app.astream(initial_state(config)):
        final_state = list(state.values())[0]
        if "errors" in final_state and final_state["errors"]:
            logger.debug(f"Errors so far: {len(final_state['errors'])}")

    return final_state


def run_workflow(config: Dict[str, Any]) -> VerifyState:
    """Synchronous wrapper for the async workflow."""
    return asyncio.run(run_workflow_async(config))
