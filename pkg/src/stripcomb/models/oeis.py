"""Types for OEIS reference data."""

from dataclasses import dataclass
from datetime import datetime
from typing import Optional, Tuple


@dataclass(frozen=True)
class OeisFixture:
    """Terms of one OEIS sequence and where they came from."""

    anumber: str
    terms: Tuple[int, ...]
    offset: int  # index of the first term
    source: str  # 'bundled', 'cached' or 'fetched'
    fetched_at: Optional[datetime] = None


@dataclass(frozen=True)
class OeisMatch:
    """Comparison of a computed prefix with reference terms."""

    anumber: str
    generator: str
    compared: int
    source: str
    first_mismatch: Optional[int] = None  # index into the compared window
    expected: Optional[int] = None
    actual: Optional[int] = None

    @property
    def matched(self) -> bool:
        return self.first_mismatch is None and self.compared > 0
