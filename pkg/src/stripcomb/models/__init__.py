"""stripcomb type definitions."""

from .base import LatticePath, PathWeight, StripSpec
from .genfun import NamedGF, Recurrence
from .identity import IdentityDescriptor
from .oeis import OeisFixture, OeisMatch
from .report import ConjectureReport, Status, check_grid
from .state import VerifyState

__all__ = [
    "LatticePath",
    "PathWeight",
    "StripSpec",
    "NamedGF",
    "Recurrence",
    "IdentityDescriptor",
    "OeisFixture",
    "OeisMatch",
    "ConjectureReport",
    "Status",
    "check_grid",
    "VerifyState",
]
