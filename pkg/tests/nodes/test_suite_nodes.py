"""Tests for the suite, audit and summary nodes."""

import importlib
from unittest.mock import patch

import pytest

from stripcomb.models.report import ConjectureReport, Status
from stripcomb.nodes.audit_node import audit_node
from stripcomb.nodes.conjecture_suite_node import conjecture_suite_node, conjecture_tasks, z_family_cells
from stripcomb.nodes.identity_suite_node import identity_suite_node, identity_tasks
from stripcomb.nodes.q_suite_node import q_suite_node
from stripcomb.nodes.summary_node import summary_node

AUDITS = {"two_reading": {"printed": {"holds": False}, "variant": {"holds": True}}}


def verified(report_id):
    return ConjectureReport(report_id, {"n": [0, 3]}, Status.VERIFIED_UP_TO, checked_upto={"n": 3})


def failing(report_id):
    return ConjectureReport(
        report_id, {"n": [0, 3]}, Status.COUNTEREXAMPLE, checked_upto={"n": 1}, witness={"params": {"n": 2}}
    )


@pytest.fixture
def state():
    return {"suite": "q", "jmax": 2, "kmax": 2, "nmax": 4, "jobs": 1, "reports": [], "errors": [], "config": {}}


@pytest.mark.asyncio
async def test_unselected_suites_are_skipped(state):
    """Test that identity and conjecture nodes leave a q-only run untouched."""
    state = await identity_suite_node(state)
    state = await conjecture_suite_node(state)
    assert state["reports"] == []
    assert state["errors"] == []


@pytest.mark.asyncio
async def test_q_suite_node_collects_reports(state):
    """Test that the q node stores the reports of its task."""
    with patch.object(importlib.import_module("stripcomb.nodes.q_suite_node"), "q_suite", return_value=[verified("q:b"), verified("q:a")]) as mock_suite:
        state = await q_suite_node(state)
    mock_suite.assert_called_once_with(n_max=4)
    assert [r.id for r in state["reports"]] == ["q:a", "q:b"]


def test_task_lists():
    """Test the task labels the suite nodes schedule."""
    labels = [label for label, _, _ in identity_tasks()]
    assert "roots:F:3" in labels
    assert "identity:fibonacci_binomial_sum" in labels
    assert len(labels) == len(set(labels))

    labels = [label for label, _, _ in conjecture_tasks({"jmax": 2, "kmax": 3, "config": {}})]
    assert labels[:3] == ["conjecture1", "conjecture2:1", "conjecture2:2"]
    assert "oeis" in labels
    assert (3, "prop5_z1_odd") in z_family_cells()
    assert (4, "prop5_z1_even") in z_family_cells()


@pytest.mark.asyncio
async def test_audit_node_never_fails(state):
    """Test that audits become passing reports with their verdicts attached."""
    with patch.object(importlib.import_module("stripcomb.nodes.audit_node"), "collect_audits", return_value=AUDITS):
        state = await audit_node(state)
    assert state["audits"] == AUDITS
    report = state["reports"][0]
    assert report.id == "audit:two_reading"
    assert report.passed
    assert report.details["variant"]["holds"]


@pytest.mark.asyncio
async def test_summary_exit_codes(state):
    """Test exit code 0 for passing reports and 1 for a counterexample or an error."""
    state["reports"] = [verified("b"), verified("a")]
    state = await summary_node(state)
    assert state["exit_code"] == 0
    assert [r.id for r in state["reports"]] == ["a", "b"]

    state["reports"].append(failing("c"))
    state = await summary_node(state)
    assert state["exit_code"] == 1
    assert state["failed"] == ["c"]


@pytest.mark.asyncio
async def test_summary_counts_node_errors(state):
    """Test that node errors fail the run even without counterexamples."""
    state["reports"] = [verified("a")]
    state["errors"] = [{"node": "q_suite_node", "error": "boom"}]
    state = await summary_node(state)
    assert state["exit_code"] == 1
