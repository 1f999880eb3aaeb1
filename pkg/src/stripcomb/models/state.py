"""State passed between the verification nodes."""

from typing import Any, Dict, List, TypedDict

from .report import ConjectureReport


class VerifyState(TypedDict, total=False):
    """
    Shared state passed between nodes.
    Each suite node appends its reports; the summary node sets the verdict.
    """

    # Input
    suite: str  # identities, q, conjectures or all
    jmax: int
    kmax: int
    nmax: int
    jobs: int

    # Suite node output
    reports: List[ConjectureReport]

    # Summary node output
    failed: List[str]
    exit_code: int

    # Global State
    config: Dict[str, Any]
    errors: List[Dict[str, Any]]
    warnings: List[Dict[str, Any]]

    # Audit node output
    audits: Dict[str, Any]
