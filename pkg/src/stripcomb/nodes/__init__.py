"""stripcomb verification nodes."""

from .audit_node import audit_node
from .conjecture_suite_node import conjecture_suite_node
from .identity_suite_node import identity_suite_node
from .q_suite_node import q_suite_node
from .summary_node import summary_node

__all__ = ["audit_node", "conjecture_suite_node", "identity_suite_node", "q_suite_node", "summary_node"]
