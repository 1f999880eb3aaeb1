"""Registry entries for exactly checkable identities."""

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Dict, Iterator, Optional, Tuple

from stripcomb.errors import ParameterRangeError


@dataclass(frozen=True)
class IdentityDescriptor:
    """One identity: parameter ranges plus an evaluator returning both sides."""

    id: str
    description: str
    ranges: Dict[str, Tuple[int, int]]  # closed ranges per parameter
    sides: Callable[..., Tuple[Any, Any]]
    admissible: Optional[Callable[..., bool]] = None
    options: Dict[str, Any] = field(default_factory=dict)  # fixed keyword arguments, e.g. truncation order
    classical: Optional[str] = None  # id of the q -> 1 counterpart

    @property
    def params(self) -> Tuple[str, ...]:
        return tuple(self.ranges)

    def left(self, **params) -> Any:
        return self.sides(**params, **self.options)[0]

    def right(self, **params) -> Any:
        return self.sides(**params, **self.options)[1]

    def evaluate(self, params: Dict[str, int], **options) -> Tuple[Any, Any]:
        return self.sides(**params, **{**self.options, **options})

    def cells(self, ranges: Optional[Dict[str, Tuple[int, int]]] = None) -> Iterator[Dict[str, int]]:
        """Parameter tuples in lexicographic order, restricted to admissible ones."""
        ranges = {**self.ranges, **(ranges or {})}
        names = list(ranges)
        for values in product(*(range(lo, hi + 1) for lo, hi in ranges.values())):
            params = dict(zip(names, values))
            if self.admissible is None or self.admissible(**params):
                yield params

    def check_range(self, params: Dict[str, int]) -> None:
        for name, value in params.items():
            if name not in self.ranges:
                raise ParameterRangeError(f"{self.id} has no parameter {name!r}")
            lo, hi = self.ranges[name]
            if not lo <= value <= hi:
                raise ParameterRangeError(f"{self.id}: {name}={value} outside [{lo}, {hi}]")
        if self.admissible is not None and set(params) == set(self.ranges) and not self.admissible(**params):
            raise ParameterRangeError(f"{self.id}: parameters {params} are not admissible")
