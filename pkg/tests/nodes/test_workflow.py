"""Tests for the verification workflow."""

import importlib
from unittest.mock import patch

import pytest

from stripcomb.models.report import ConjectureReport, Status
from stripcomb.workflow import create_workflow, initial_state, run_workflow_async

AUDITS = {"two_reading": {"printed": {"holds": False}, "variant": {"holds": True}}}


def test_initial_state_defaults():
    """Test defaults and the rejection of unknown suites."""
    state = initial_state({"suite": "q"})
    assert (state["jmax"], state["kmax"], state["nmax"], state["jobs"]) == (3, 4, None, 1)
    assert state["reports"] == [] and state["errors"] == []
    with pytest.raises(ValueError):
        initial_state({"suite": "everything"})



def test_graph_nodes():
    """Test that the compiled graph holds the five suite and report nodes."""
    nodes = set(create_workflow().get_graph().nodes)
    assert {"identity_suite_node", "q_suite_node", "conjecture_suite_node", "audit_node", "summary_node"} <= nodes

@pytest.mark.asyncio
async def test_q_only_run():
    """Test a full pass through the graph with the q-suite selected."""
    report = ConjectureReport("q:stub", {"n": [0, 2]}, Status.VERIFIED_UP_TO, checked_upto={"n": 2})
    with (
        patch.object(importlib.import_module("stripcomb.nodes.q_suite_node"), "q_suite", return_value=[report]),
        patch.object(importlib.import_module("stripcomb.nodes.audit_node"), "collect_audits", return_value=AUDITS),
    ):
        final_state = await run_workflow_async({"suite": "q", "nmax": 2})

    assert [r.id for r in final_state["reports"]] == ["audit:two_reading", "q:stub"]
    assert final_state["exit_code"] == 0
    assert final_state["failed"] == []
