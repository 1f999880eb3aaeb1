"""Enumeration of the strip paths A_{n,k} and their extremal-point weights."""

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from typing import Dict, Iterator, List, Tuple

from loguru import logger

from stripcomb.errors import ParameterRangeError
from stripcomb.exactmath.poly import Poly
from stripcomb.models.base import LatticePath, StripSpec

FINAL_HEIGHTS = (0, -1)


def _reachable(height: int, remaining: int) -> bool:
    """Whether a final height in {0, -1} can still be reached in ``remaining`` steps."""
    return any(abs(height - f) <= remaining and (height - f - remaining) % 2 == 0 for f in FINAL_HEIGHTS)


def _extend(prefix: str, n: int, strip: StripSpec) -> Iterator[str]:
    height = prefix.count("U") - prefix.count("D")
    stack: List[Tuple[str, int]] = [(prefix, height)]
    # Depth-first, pushing U before D so that D-branches pop first.
    while stack:
        steps, h = stack.pop()
        remaining = n - len(steps)
        if remaining == 0:
            if h in FINAL_HEIGHTS:
                yield steps
            continue
        for step, dh in (("U", 1), ("D", -1)):
            nh = h + dh
            if strip.contains(nh) and _reachable(nh, remaining - 1):
                stack.append((steps + step, nh))


def _valid_prefix(prefix: str, n: int, strip: StripSpec) -> bool:
    h = 0
    for i, step in enumerate(prefix):
        h += 1 if step == "U" else -1
        if not strip.contains(h) or not _reachable(h, n - i - 1):
            return False
    return True


def _enumerate_partition(prefix: str, n: int, k: int) -> List[str]:
    strip = StripSpec.of(k)
    if not _valid_prefix(prefix, n, strip):
        return []
    return list(_extend(prefix, n, strip))


def partition_prefixes(n: int, depth: int = 2) -> List[str]:
    """Step prefixes used to split enumeration into independent jobs, in D < U order."""
    depth = min(depth, n)
    return ["".join(p) for p in product("DU", repeat=depth)]


def enumerate_strip(n: int, k: int, jobs: int = 1) -> Iterator[LatticePath]:
    """Yield the paths of A_{n,k} in lexicographic order with D < U.

    With ``jobs > 1`` the first two steps partition the work across processes;
    the merged output is identical to the sequential one.
    """
    if n < 0 or k < 0:
        raise ParameterRangeError(f"enumerate_strip needs n, k >= 0, got n={n}, k={k}")
    prefixes = partition_prefixes(n)
    if jobs > 1 and len(prefixes) > 1:
        logger.debug(f"Enumerating A_({n},{k}) over {len(prefixes)} prefixes with {jobs} jobs")
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_enumerate_partition, prefixes, [n] * len(prefixes), [k] * len(prefixes)))
    else:
        parts = [_enumerate_partition(prefix, n, k) for prefix in prefixes]
    for part in parts:
        for steps in part:
            yield LatticePath(steps)


def weight_counts(n: int, k: int, prefix: str = "") -> Dict[Tuple[int, int], int]:
    """Number of paths of A_{n,k} starting with ``prefix``, keyed by ``(e, iota)``."""
    counts: Counter = Counter()
    for path in enumerate_strip(n, k):
        if not path.steps.startswith(prefix):
            continue
        w = path.weight()
        counts[(w.e, w.iota)] += 1
    return dict(counts)


def weight_poly_bruteforce(n: int, k: int) -> Poly:
    """``a(n,k,t) = sum over A_{n,k} of t^e(v)``."""
    coeffs: Counter = Counter()
    for (e, _), count in weight_counts(n, k).items():
        coeffs[e] += count
    return Poly([coeffs[e] for e in range(max(coeffs, default=-1) + 1)], "t")


def weight_poly_bruteforce_q(n: int, k: int) -> Poly:
    """``sum over A_{n,k} of q^iota(v) t^e(v)``, a polynomial in t over q."""
    by_e: Dict[int, Counter] = {}
    for (e, iota), count in weight_counts(n, k).items():
        by_e.setdefault(e, Counter())[iota] += count
    coeffs = []
    for e in range(max(by_e, default=-1) + 1):
        row = by_e.get(e, Counter())
        coeffs.append(Poly([row[i] for i in range(max(row, default=-1) + 1)], "q"))
    return Poly(coeffs, "t")


def weight_up_prefix(n: int, strip: int, j: int) -> Poly:
    """Weight of the paths of A_{n,strip} whose first ``j`` steps are up-steps."""
    if strip % 2 == 0:
        raise ParameterRangeError(f"weight_up_prefix needs an odd strip, got {strip}")
    if j < 0:
        raise ParameterRangeError(f"prefix length must be nonnegative, got {j}")
    if n < 0 or j > n:
        return Poly((), "t")
    coeffs: Counter = Counter()
    for (e, _), count in weight_counts(n, strip, "U" * j).items():
        coeffs[e] += count
    return Poly([coeffs[e] for e in range(max(coeffs, default=-1) + 1)], "t")
