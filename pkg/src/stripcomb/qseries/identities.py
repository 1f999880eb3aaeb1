"""q-analogues of the binomial identities, their q -> 1 specializations and the inferred exponent c_j."""

from typing import Any, Callable, Dict, List, Optional, Tuple

from loguru import logger

from stripcomb.classic.identities import IDENTITIES, identity, resolve_identity, run_identity
from stripcomb.errors import UnknownIdentityError
from stripcomb.exactmath.poly import Q, X, Poly, binom, subs
from stripcomb.exactmath.series import TruncSeries
from stripcomb.models.identity import IdentityDescriptor
from stripcomb.models.report import ConjectureReport, check_grid, mismatch
from stripcomb.paths.strip import weight_poly_bruteforce_q
from stripcomb.qseries.qpoly import (
    at_q_one,
    q_divided_derivative_series,
    q_int,
    q_min_exponent,
    qbinom,
    qpochhammer,
)

Q_IDENTITIES: Dict[str, IdentityDescriptor] = {}

Q_EQUATION_IDS: Dict[str, str] = {
    "q:eq1.6": "q:schur_fibonacci",
    "q:eq2.46": "q:strip_binomial_square_gf",
    "q:eq2.47": "q:r_poly_forms",
    "q:eq2.48": "q:derivative_kernel",
    "q:eq2.49": "q:derivative_kernel_recurrence",
    "q:eq2.50": "q:power_basis_expansion",
    "q:eq2.51": "q:divided_power_pochhammer",
    "q:eq2.53": "q:kernel_alternating_form",
    "q:eq2.54": "q:square_binomial_expansion",
    "q:eq2.55": "q:narayana_expansion",
}


def resolve_q_identity(id: str) -> IdentityDescriptor:
    """Resolve a q-identity id; the ``q:`` namespace prefix may be left out."""
    if not id.startswith("q:"):
        id = f"q:{id}"
    return resolve_identity(id, Q_IDENTITIES, Q_EQUATION_IDS)


# q id -> (classical parameters, factor the classical sides are multiplied by)
SPECIALIZATIONS: Dict[str, Tuple[Callable[..., Dict[str, int]], Callable[..., int]]] = {
    "q:kernel_alternating_form": (lambda n, j, k: {"k": k, "m": k - n, "j": j}, lambda n, j, k: 1),
    "q:narayana_expansion": (lambda k: {"k": k}, lambda k: k),
}


def _x_poly(terms) -> Poly:
    """Sum of ``(exponent, q-coefficient)`` pairs as a polynomial in x."""
    total: Any = 0
    for e, c in terms:
        total = total + c * X**e
    return total if isinstance(total, Poly) and total.var == "x" else Poly([total], "x")


def _q_series(term: Callable[[int], Any], order: int) -> TruncSeries:
    return TruncSeries.from_values([term(n) for n in range(order + 1)])


def _window(poly: Any, order: int) -> TruncSeries:
    return TruncSeries.from_poly(poly, order)


def schur_left(n: int) -> Poly:
    """``sum_k q^(k^2) [n-k, k]``."""
    return sum((Q ** (k * k) * qbinom(n - k, k) for k in range(n // 2 + 1)), Poly((), "q"))


def schur_right(n: int) -> Poly:
    """``sum_j (-1)^j q^(j(5j-1)/2) [n, floor((n+5j)/2)]``."""
    total = Poly((), "q")
    for j in range(-n - 1, n + 2):
        term = qbinom(n, (n + 5 * j) // 2)
        if term:
            total = total + (-1) ** (j % 2) * Q ** (j * (5 * j - 1) // 2) * term
    return total


def r_poly_q(n: int) -> Poly:
    """``sum_j q^(j^2+j) [n,j]^2 x^(2j) + sum_{j>=1} q^(j^2) [n,j] [n,j-1] x^(2j-1)``."""
    even = [(2 * j, Q ** (j * j + j) * qbinom(n, j) ** 2) for j in range(n + 1)]
    odd = [(2 * j - 1, Q ** (j * j) * qbinom(n, j) * qbinom(n, j - 1)) for j in range(1, n + 1)]
    return _x_poly(even + odd)


def r_poly_q_interleaved(n: int) -> Poly:
    """``sum_j q^floor((j+1)^2/4) [n, floor(j/2)] [n, floor((j+1)/2)] x^j``."""
    return _x_poly(
        (j, Q ** ((j + 1) ** 2 // 4) * qbinom(n, j // 2) * qbinom(n, (j + 1) // 2)) for j in range(2 * n + 1)
    )


def q_kernel_closed(n: int, j: int, k: int) -> Poly:
    """``b(n,j,x,q) = sum_i q^(i(j+i-n)) [j+k-n, k-i] [n,i] x^i``, terms with vanishing brackets dropped."""
    terms = []
    for i in range(n + 1):
        bracket = qbinom(j + k - n, k - i) * qbinom(n, i)
        if bracket:
            terms.append((i, Q ** (i * (j + i - n)) * bracket))
    return _x_poly(terms)


def q_kernel_from_derivative(n: int, j: int, k: int, order: int) -> TruncSeries:
    """``(x;q)_(k+j+1) (D_q^j/[j]!) [x^n / (x;q)_(k+1)]`` as a truncated series."""
    base = _q_series(lambda m: qbinom(m - n + k, k) if m >= n else 0, order + j)
    return q_divided_derivative_series(base, j) * qpochhammer(k + j + 1)


def _shifted(sides: List[List[Tuple[int, Any, Any]]]) -> List[Poly]:
    """Multiply every side by the smallest ``q^s`` that clears negative q-exponents.

    Each side is a list of ``(q-exponent, q-coefficient, x-factor)`` terms.
    """
    exponents = [e for side in sides for e, c, _ in side if c]
    s = max(0, -min(exponents, default=0))
    return [sum((Q ** (e + s) * c * f for e, c, f in side if c), Poly((), "x")) for side in sides]


@identity(
    "q:schur_fibonacci",
    "sum_k q^(k^2) [n-k,k] = sum_j (-1)^j q^(j(5j-1)/2) [n, floor((n+5j)/2)]",
    ranges={"n": (0, 12)},
    classical="fibonacci_binomial_sum",
    registry=Q_IDENTITIES,
)
def _schur_fibonacci(n):
    return schur_left(n), schur_right(n)


@identity(
    "q:schur_path_weight",
    "sum over A_{n,3} of q^iota(v) = sum_k q^(k^2) [n-k,k]",
    ranges={"n": (0, 12)},
    classical="fibonacci_binomial_sum",
    registry=Q_IDENTITIES,
)
def _schur_path_weight(n):
    return subs(weight_poly_bruteforce_q(n, 3), "t", 1), schur_left(n)


@identity(
    "q:strip_binomial_square_gf",
    "(x;q^k)_2 (qx^2;q)_(2k-1) sum [floor((n+2k)/2),k] [floor((n+1+2k)/2),k] x^n = r_{k-1}(x,q)",
    ranges={"k": (1, 4)},
    options={"order": 16},
    classical="strip_binomial_square_gf",
    registry=Q_IDENTITIES,
)
def _strip_binomial_square_gf(k, order):
    terms = _q_series(lambda n: qbinom((n + 2 * k) // 2, k) * qbinom((n + 1 + 2 * k) // 2, k), order)
    factor = qpochhammer(2, X, Q**k) * qpochhammer(2 * k - 1, Q * X**2, Q)
    return terms * factor, _window(r_poly_q(k - 1), order)


@identity(
    "q:r_poly_forms",
    "sum_j q^floor((j+1)^2/4) [n,floor(j/2)] [n,floor((j+1)/2)] x^j equals the split even/odd form of r_n(x,q)",
    ranges={"j": (0, 8)},
    classical="r_poly_forms",
    registry=Q_IDENTITIES,
)
def _r_poly_forms(j):
    return r_poly_q(j), r_poly_q_interleaved(j)


@identity(
    "q:derivative_kernel",
    "(x;q)_(k+j+1) D_q^j/[j]! [x^n/(x;q)_(k+1)] = b(n,j,x,q) for n <= k",
    ranges={"n": (0, 4), "j": (0, 4), "k": (0, 4)},
    admissible=lambda n, j, k: n <= k,
    options={"order": 12},
    classical="derivative_kernel",
    registry=Q_IDENTITIES,
)
def _derivative_kernel(n, j, k, order):
    return q_kernel_from_derivative(n, j, k, order), _window(q_kernel_closed(n, j, k), order)


@identity(
    "q:derivative_kernel_recurrence",
    "b(n,j,x,q) = q^j x b(n-1,j,x,q) + (1 - q^(k+j) x) b(n-1,j-1,x,q)",
    ranges={"n": (1, 6), "j": (1, 6), "k": (1, 6)},
    admissible=lambda n, j, k: n <= k,
    classical="derivative_kernel_recurrence",
    registry=Q_IDENTITIES,
)
def _derivative_kernel_recurrence(n, j, k):
    right = Q**j * X * q_kernel_closed(n - 1, j, k) + (1 - Q ** (k + j) * X) * q_kernel_closed(n - 1, j - 1, k)
    return q_kernel_closed(n, j, k), right


@identity(
    "q:power_basis_expansion",
    "q^C(n,2) x^n = sum_l (-1)^l [n,l] q^C(n-l,2) (x;q)_l",
    ranges={"n": (0, 8)},
    registry=Q_IDENTITIES,
)
def _power_basis_expansion(n):
    right = sum(
        ((-1) ** ell * qbinom(n, ell) * Q ** binom(n - ell, 2) * qpochhammer(ell) for ell in range(n + 1)),
        Poly((), "x"),
    )
    return Q ** binom(n, 2) * X**n, right


def divided_pochhammer_left(j: int, ell: int, k: int, order: int) -> TruncSeries:
    """``(x;q)_(k+j+1) D_q^j/[j]! [(x;q)_l / (x;q)_(k+1)]`` as a truncated series."""
    inverse = _q_series(lambda m: qbinom(m + k, k), order + j)
    return q_divided_derivative_series(inverse * qpochhammer(ell), j) * qpochhammer(k + j + 1)


def infer_cj(j: int, ell: int, k: int) -> int:
    """Exponent c in ``D_q^j (x;q)_l / ([j]! (x;q)_(k+1)) = q^c [k+j-l, j] (x;q)_l / (x;q)_(k+j+1)``.

    Read off the constant term in x, where the bracket contributes ``1 + O(q)``.
    """
    return q_min_exponent(divided_pochhammer_left(j, ell, k, 0)[0])


def cj_formula(j: int, ell: int) -> int:
    return j * ell


@identity(
    "q:divided_power_pochhammer",
    "(x;q)_(k+j+1) D_q^j/[j]! [(x;q)_l/(x;q)_(k+1)] = q^(j*l) [k+j-l, j] (x;q)_l for l <= k",
    ranges={"j": (0, 4), "ell": (0, 4), "k": (0, 4)},
    admissible=lambda j, ell, k: ell <= k,
    options={"order": 12},
    registry=Q_IDENTITIES,
)
def _divided_power_pochhammer(j, ell, k, order):
    right = Q ** cj_formula(j, ell) * qbinom(k + j - ell, j) * qpochhammer(ell)
    return divided_pochhammer_left(j, ell, k, order), _window(right, order)


@identity(
    "q:kernel_alternating_form",
    "q^s sum_i q^(i(j+i-n)) [j+k-n,k-i] [n,i] x^i = q^s sum_l (-1)^l q^(C(l+1,2)+l(j-n)) [n,l] [k+j-l,j] (x;q)_l",
    ranges={"n": (0, 5), "j": (0, 5), "k": (0, 5)},
    admissible=lambda n, j, k: n <= k,
    registry=Q_IDENTITIES,
    classical="kernel_alternating_form",
)
def _kernel_alternating_form(n, j, k):
    left = [(i * (j + i - n), qbinom(j + k - n, k - i) * qbinom(n, i), X**i) for i in range(n + 1)]
    right = [
        (binom(ell + 1, 2) + ell * (j - n), (-1) ** ell * qbinom(n, ell) * qbinom(k + j - ell, j), qpochhammer(ell))
        for ell in range(n + 1)
    ]
    shifted = _shifted([left, right])
    return shifted[0], shifted[1]


@identity(
    "q:square_binomial_expansion",
    "sum_l (-1)^l q^C(l+1,2) [k,l] [2k-l,k] (x;q)_l = sum_i q^(i^2) [k,i]^2 x^i",
    ranges={"k": (0, 8)},
    classical="central_square_expansion",
    registry=Q_IDENTITIES,
)
def _square_binomial_expansion(k):
    left = sum(
        (
            (-1) ** ell * Q ** binom(ell + 1, 2) * qbinom(k, ell) * qbinom(2 * k - ell, k) * qpochhammer(ell)
            for ell in range(k + 1)
        ),
        Poly((), "x"),
    )
    return left, _x_poly((i, Q ** (i * i) * qbinom(k, i) ** 2) for i in range(k + 1))


@identity(
    "q:narayana_expansion",
    "[k+1] sum_i q^(i(i-1)) [k,i] [k,i-1] x^i = [k] sum_l (-1)^l q^C(l,2) [k+1,l] [2k-l,k] (x;q)_l",
    ranges={"k": (1, 8)},
    classical="narayana_alternating",
    registry=Q_IDENTITIES,
)
def _narayana_expansion(k):
    left = q_int(k + 1) * _x_poly((i, Q ** (i * (i - 1)) * qbinom(k, i) * qbinom(k, i - 1)) for i in range(1, k + 1))
    right = q_int(k) * sum(
        (
            (-1) ** ell * Q ** binom(ell, 2) * qbinom(k + 1, ell) * qbinom(2 * k - ell, k) * qpochhammer(ell)
            for ell in range(k + 2)
        ),
        Poly((), "x"),
    )
    return left, right


def q_identity_check(id: str, params: Optional[Dict[str, int]] = None, **options) -> ConjectureReport:
    """Expand both sides of a registered q-identity and report the verdict."""
    return run_identity(resolve_q_identity(id), params, **options)


def _aligned(a: Any, b: Any) -> Tuple[Any, Any]:
    if isinstance(a, TruncSeries) and isinstance(b, TruncSeries):
        order = min(a.order, b.order)
        return a.truncate(order), b.truncate(order)
    return a, b


def _in_range(descriptor: IdentityDescriptor, params: Dict[str, int]) -> bool:
    if set(params) != set(descriptor.ranges):
        return False
    if any(not lo <= params[name] <= hi for name, (lo, hi) in descriptor.ranges.items()):
        return False
    return descriptor.admissible is None or descriptor.admissible(**params)


def q_to_one_check(id: str) -> ConjectureReport:
    """Both sides of a q-identity at q = 1 against the sides of its classical counterpart."""
    descriptor = resolve_q_identity(id)
    if descriptor.classical is None:
        raise UnknownIdentityError(f"{id} has no classical counterpart")
    classical = IDENTITIES[descriptor.classical]
    translate, factor = SPECIALIZATIONS.get(descriptor.id, (lambda **p: p, lambda **p: 1))
    cells = [p for p in descriptor.cells() if _in_range(classical, translate(**p))]

    def check(cell):
        q_left, q_right = descriptor.evaluate(cell)
        c_left, c_right = classical.evaluate(translate(**cell))
        scale = factor(**cell)
        left, q_left = _aligned(c_left * scale, at_q_one(q_left))
        right, q_right = _aligned(c_right * scale, at_q_one(q_right))
        return mismatch((left, right), (q_left, q_right))

    report = check_grid(f"{descriptor.id}@q=1", {name: list(r) for name, r in descriptor.ranges.items()}, cells, check)
    if not report.passed:
        logger.error(f"q -> 1 specialization of {descriptor.id} disagrees with {classical.id}")
    return report


def cj_inference_check(j_max: int = 4, k_max: int = 4) -> ConjectureReport:
    """Infer c_j from the constant term and compare with ``j * l`` over ``l <= k``."""
    cells = ({"j": j, "ell": ell, "k": k} for j in range(j_max + 1) for k in range(k_max + 1) for ell in range(k + 1))

    def check(cell):
        return mismatch(cj_formula(cell["j"], cell["ell"]), infer_cj(**cell))

    report = check_grid("q:cj_inference", {"j": [0, j_max], "k": [0, k_max]}, cells, check)
    report.details["formula"] = "c_j = j*l"
    return report


def q_suite(n_max: Optional[int] = None) -> List[ConjectureReport]:
    """Every registered q-identity, its q -> 1 specialization where one exists, and the c_j inference."""
    reports = []
    for id, descriptor in Q_IDENTITIES.items():
        logger.debug(f"Checking {id}")
        ranges = None
        if n_max is not None and "n" in descriptor.ranges:
            lo, hi = descriptor.ranges["n"]
            ranges = {"n": (lo, max(lo, min(hi, n_max)))}
        reports.append(run_identity(descriptor, ranges=ranges))
        if descriptor.classical is not None:
            reports.append(q_to_one_check(id))
    reports.append(cj_inference_check())
    return reports
