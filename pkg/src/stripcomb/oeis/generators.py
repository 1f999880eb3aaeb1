"""Generators that reproduce each cited OEIS sequence from the strip formulas."""

from dataclasses import dataclass
from typing import Callable, Dict, List

from stripcomb.errors import OeisError
from stripcomb.formulas import a_count, a_count_z
from stripcomb.paths.corridor import corridor_closed


@dataclass(frozen=True)
class Generator:
    """How to compute a prefix of one sequence.

    ``skip`` leading reference terms have no counterpart (``F_0 = 0`` before ``a(n,3) = F_{n+1}``).
    """

    anumber: str
    label: str
    terms: Callable[[int], List[int]]
    skip: int = 0


def _strip(k: int) -> Callable[[int], List[int]]:
    return lambda count: [a_count(n, k) for n in range(count)]


def _strip_z1(k: int) -> Callable[[int], List[int]]:
    return lambda count: [int(a_count_z(n, k, 1)) for n in range(count)]


def _corridor_rows(count: int) -> List[int]:
    terms: List[int] = []
    n = 0
    while len(terms) < count:
        terms.extend(corridor_closed(n, j) for j in range(n + 1))
        n += 1
    return terms[:count]


GENERATORS: Dict[str, Generator] = {
    g.anumber: g
    for g in (
        Generator("A016116", "a(n,2)", _strip(2)),
        Generator("A000045", "a(n,3) = F(n+1)", _strip(3), skip=1),
        Generator("A182522", "a(n,4)", _strip(4)),
        Generator("A028495", "a(n,5)", _strip(5)),
        Generator("A030436", "a(n,6)", _strip(6)),
        Generator("A061551", "a(n,7)", _strip(7)),
        Generator("A178381", "a(n,8)", _strip(8)),
        Generator("A001045", "a(n,1,1,1) = J(n+1)", _strip_z1(1), skip=1),
        Generator("A011782", "a(n,2,1,1)", _strip_z1(2)),
        Generator("A099163", "a(n,3,1,1)", _strip_z1(3)),
        Generator("A005578", "a(n,4,1,1)", _strip_z1(4)),
        Generator("A061554", "c(n,j) by rows", _corridor_rows),
    )
}


def normalize_anumber(anumber: str) -> str:
    """``'a45'`` and ``'A000045'`` both become ``'A000045'``."""
    text = anumber.strip().upper().lstrip("A")
    if not text.isdigit():
        raise OeisError(f"not an A-number: {anumber!r}")
    return f"A{int(text):06d}"


def generator_for(anumber: str) -> Generator:
    key = normalize_anumber(anumber)
    try:
        return GENERATORS[key]
    except KeyError:
        raise OeisError(f"no generator registered for {key}") from None
