"""Verdicts produced by identity and conjecture checks."""

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, Iterable, Optional

from stripcomb.exactmath.poly import Laurent, Poly, to_text
from stripcomb.exactmath.series import RatFunc, TruncSeries

# Integers beyond this magnitude lose precision as JSON numbers.
JSON_INT_LIMIT = 2**53


class Status(str, Enum):
    VERIFIED_UP_TO = "VERIFIED_UP_TO"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"
    SKIPPED = "SKIPPED"


def jsonable(value: Any) -> Any:
    """Convert exact values to JSON-safe data; large integers become strings."""
    if isinstance(value, bool) or value is None or isinstance(value, (str, float)):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) >= JSON_INT_LIMIT else value
    if isinstance(value, (Poly, Laurent)):
        return to_text(value)
    if isinstance(value, (RatFunc, TruncSeries)):
        return value.to_text()
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


@dataclass
class ConjectureReport:
    """Structured verdict for one identity or conjecture over a parameter grid."""

    id: str
    grid: Dict[str, Any]
    status: Status
    checked_upto: Dict[str, Any] = field(default_factory=dict)
    witness: Optional[Dict[str, Any]] = None
    wall_ms: float = 0.0
    details: Dict[str, Any] = field(default_factory=dict)  # report-only findings, never asserted

    def __post_init__(self):
        if self.status == Status.COUNTEREXAMPLE and not self.witness:
            raise ValueError(f"counterexample report {self.id} carries no witness")

    @property
    def passed(self) -> bool:
        return self.status != Status.COUNTEREXAMPLE

    def sort_key(self):
        return (self.id, tuple(sorted((k, str(v)) for k, v in self.grid.items())))

    def to_dict(self, include_timing: bool = True) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "id": self.id,
            "grid": jsonable(self.grid),
            "status": self.status.value,
            "checked_upto": jsonable(self.checked_upto),
        }
        if self.witness is not None:
            out["witness"] = jsonable(self.witness)
        if self.details:
            out["details"] = jsonable(self.details)
        if include_timing:
            out["wall_ms"] = round(self.wall_ms, 3)
        return out


def check_grid(
    report_id: str,
    grid: Dict[str, Any],
    cells: Iterable[Dict[str, Any]],
    check: Callable[[Dict[str, Any]], Optional[Dict[str, Any]]],
) -> ConjectureReport:
    """Run ``check`` over ``cells`` in order, stopping at the first witness.

    ``check`` returns ``None`` when the cell holds, otherwise a dict with
    ``expected`` and ``actual`` entries that becomes the witness.
    """
    start = time.perf_counter()
    last: Optional[Dict[str, Any]] = None
    for params in cells:
        failure = check(params)
        if failure is not None:
            return ConjectureReport(
                id=report_id,
                grid=grid,
                status=Status.COUNTEREXAMPLE,
                checked_upto=last or {},
                witness={"params": dict(params), **failure},
                wall_ms=(time.perf_counter() - start) * 1000,
            )
        last = params
    status = Status.SKIPPED if last is None else Status.VERIFIED_UP_TO
    return ConjectureReport(
        id=report_id,
        grid=grid,
        status=status,
        checked_upto=dict(last or {}),
        wall_ms=(time.perf_counter() - start) * 1000,
    )


def mismatch(expected: Any, actual: Any) -> Optional[Dict[str, Any]]:
    """Witness payload when ``expected != actual``, else ``None``."""
    if expected == actual:
        return None
    return {"expected": expected, "actual": actual}
