"""Registry of closed-form polynomial and binomial identities, checked by exact expansion."""

from typing import Any, Callable, Dict, Optional, Tuple

from loguru import logger

from stripcomb.classic.families import PHI_S, PHI_X, fib_poly, lucas_poly, phi_poly
from stripcomb.classic.numbers import narayana, r_poly, r_poly_narayana
from stripcomb.errors import UnknownIdentityError
from stripcomb.exactmath.poly import S, X, Y, Z, Poly, binom, subs
from stripcomb.exactmath.series import TruncSeries
from stripcomb.models.identity import IdentityDescriptor
from stripcomb.models.report import ConjectureReport, check_grid, mismatch

IDENTITIES: Dict[str, IdentityDescriptor] = {}

# Equation-number aliases for the descriptive ids registered below.
EQUATION_IDS: Dict[str, str] = {
    "eq1.5": "fibonacci_binomial_sum",
    "eq1.13": "binet_substitution",
    "eq2.7": "phi_substitution",
    "eq2.14": "phi_recurrence",
    "eq2.31": "r_poly_forms",
    "eq2.33": "strip_binomial_square_gf",
    "eq2.34": "shifted_binomial_product_gf",
    "eq2.35": "binomial_square_gf",
    "eq2.36": "alternating_binomial_expansion",
    "eq2.37": "central_square_expansion",
    "eq2.38": "two_parameter_expansion",
    "eq2.39": "derivative_kernel",
    "eq2.41": "binomial_square_gf",
    "eq2.42": "narayana_shift_gf",
    "eq2.44": "kernel_alternating_form",
    "eq2.45": "narayana_alternating",
}


def resolve_identity(
    id: str, registry: Dict[str, IdentityDescriptor], equations: Dict[str, str]
) -> IdentityDescriptor:
    """Look up ``id`` among the descriptive ids and the equation ids."""
    key = equations.get(id, id)
    if key not in registry:
        raise UnknownIdentityError(f"no identity registered as {id!r}")
    return registry[key]


def identity(
    id: str,
    description: str,
    ranges: Dict[str, Tuple[int, int]],
    admissible: Optional[Callable[..., bool]] = None,
    options: Optional[Dict[str, Any]] = None,
    classical: Optional[str] = None,
    registry: Optional[Dict[str, IdentityDescriptor]] = None,
):
    """Register a function returning ``(left, right)`` as an identity."""
    target = IDENTITIES if registry is None else registry

    def decorator(fn):
        if id in target:
            raise ValueError(f"identity {id!r} registered twice")
        target[id] = IdentityDescriptor(
            id=id,
            description=description,
            ranges=ranges,
            sides=fn,
            admissible=admissible,
            options=options or {},
            classical=classical,
        )
        return fn

    return decorator


def run_identity(
    descriptor: IdentityDescriptor,
    params: Optional[Dict[str, int]] = None,
    ranges: Optional[Dict[str, Tuple[int, int]]] = None,
    **options,
) -> ConjectureReport:
    """Check ``descriptor`` on one parameter tuple, a sub-range, or its whole declared range."""
    params = params or {}
    descriptor.check_range(params)
    pinned = {name: (value, value) for name, value in params.items()}
    grid = {name: list(bounds) for name, bounds in {**descriptor.ranges, **(ranges or {}), **pinned}.items()}

    def check(cell):
        left, right = descriptor.evaluate(cell, **options)
        return mismatch(left, right)

    report = check_grid(descriptor.id, grid, descriptor.cells({**(ranges or {}), **pinned}), check)
    if not report.passed:
        logger.error(f"Identity {descriptor.id} fails at {report.witness['params']}")
    return report


def identity_check(id: str, params: Optional[Dict[str, int]] = None, **options) -> ConjectureReport:
    """Expand both sides of a registered identity and report the verdict."""
    return run_identity(resolve_identity(id, IDENTITIES, EQUATION_IDS), params, **options)


def _series(term: Callable[[int], int], order: int) -> TruncSeries:
    return TruncSeries.from_values([term(n) for n in range(order + 1)])


def _window(poly: Any, order: int) -> TruncSeries:
    return TruncSeries.from_poly(poly, order)


def _poly(coeffs) -> Poly:
    return Poly(coeffs, "x")


@identity("lucas_from_fib", "L_n = F_{n+1} + s F_{n-1}", ranges={"n": (1, 16)})
def _lucas_from_fib(n):
    return lucas_poly(n), fib_poly(n + 1) + S * fib_poly(n - 1)


@identity("F2n_factor", "F_{2n} = F_n L_n", ranges={"n": (0, 14)})
def _f2n_factor(n):
    return fib_poly(2 * n), fib_poly(n) * lucas_poly(n)


@identity("fib_square_sum", "F_{k+1}^2 + s F_k^2 = F_{2k+1}", ranges={"k": (0, 14)})
def _fib_square_sum(k):
    return fib_poly(k + 1) ** 2 + S * fib_poly(k) ** 2, fib_poly(2 * k + 1)


@identity(
    "binet_substitution",
    "L_n(x+y, -xy) = x^n + y^n and (x-y) F_n(x+y, -xy) = x^n - y^n",
    ranges={"n": (0, 12)},
)
def _binet_substitution(n):
    left = (lucas_poly(n, X + Y, -X * Y), (X - Y) * fib_poly(n, X + Y, -X * Y))
    return left, (X**n + Y**n, X**n - Y**n)


def _substituted(family_poly: Any) -> Any:
    return subs(subs(family_poly, "x", PHI_X), "s", PHI_S)


@identity(
    "phi_recurrence",
    "Φ_n = (1 + (1-t)x^2) Φ_{n-1} - x^2 Φ_{n-2}, Φ_n obtained by substituting into F_n(x, s)",
    ranges={"n": (2, 12)},
)
def _phi_recurrence(n):
    return _substituted(fib_poly(n)), PHI_X * _substituted(fib_poly(n - 1)) + PHI_S * _substituted(fib_poly(n - 2))


@identity(
    "lambda_recurrence",
    "Λ_n = (1 + (1-t)x^2) Λ_{n-1} - x^2 Λ_{n-2}, Λ_n obtained by substituting into L_n(x, s)",
    ranges={"n": (2, 12)},
)
def _lambda_recurrence(n):
    return _substituted(lucas_poly(n)), PHI_X * _substituted(lucas_poly(n - 1)) + PHI_S * _substituted(
        lucas_poly(n - 2)
    )


@identity("phi_substitution", "Φ_n from its recurrence equals F_n(1 + (1-t)x^2, -x^2)", ranges={"n": (0, 12)})
def _phi_substitution(n):
    return phi_poly(n), _substituted(fib_poly(n))


@identity(
    "strip_binomial_square_gf",
    "(1-x)^2 (1-x^2)^(2k-1) sum C(floor((n+2k)/2),k) C(floor((n+1+2k)/2),k) x^n = r_{k-1}(x)",
    ranges={"k": (1, 5)},
    options={"order": 30},
)
def _strip_binomial_square_gf(k, order):
    terms = _series(lambda n: binom((n + 2 * k) // 2, k) * binom((n + 1 + 2 * k) // 2, k), order)
    return terms * ((1 - X) ** 2 * (1 - X**2) ** (2 * k - 1)), _window(r_poly(k - 1), order)


@identity(
    "shifted_binomial_product_gf",
    "(1-x)^(2k+1) sum_{n>=1} C(n+k-1,k) C(n+k,k) x^(n-1) = sum_j C(k-1,j-1) C(k+1,j) x^(j-1)",
    ranges={"k": (1, 6)},
    options={"order": 24},
)
def _shifted_binomial_product_gf(k, order):
    terms = _series(lambda m: binom(m + k, k) * binom(m + k + 1, k), order)
    right = _poly([binom(k - 1, j - 1) * binom(k + 1, j) for j in range(1, k + 1)])
    return terms * (1 - X) ** (2 * k + 1), _window(right, order)


@identity(
    "binomial_square_gf",
    "(1-x)^(2k+1) sum C(n+k,k)^2 x^n = sum_j C(k,j)^2 x^j",
    ranges={"k": (0, 6)},
    options={"order": 24},
)
def _binomial_square_gf(k, order):
    terms = _series(lambda n: binom(n + k, k) ** 2, order)
    return terms * (1 - X) ** (2 * k + 1), _window(_poly([binom(k, j) ** 2 for j in range(k + 1)]), order)


@identity(
    "binomial_product_gf",
    "(1-x)^(2k+1) sum C(n+k,k) C(n+k-m,k) x^(n-m) = sum_{j>=m} C(k-m,j-m) C(k+m,j) x^(j-m)",
    ranges={"k": (0, 6), "m": (0, 6)},
    admissible=lambda k, m: m <= k,
    options={"order": 24},
)
def _binomial_product_gf(k, m, order):
    terms = _series(lambda p: binom(p + m + k, k) * binom(p + k, k), order)
    right = _poly([binom(k - m, j - m) * binom(k + m, j) for j in range(m, k + 1)])
    return terms * (1 - X) ** (2 * k + 1), _window(right, order)


@identity(
    "alternating_binomial_expansion",
    "sum_j (-1)^j C(k-m,j) C(2k-j,k) (1-x)^j = sum_{j>=m} C(k-m,j-m) C(k+m,j) x^(j-m)",
    ranges={"k": (0, 8), "m": (0, 8)},
    admissible=lambda k, m: m <= k,
)
def _alternating_binomial_expansion(k, m):
    left = sum((-1) ** j * binom(k - m, j) * binom(2 * k - j, k) * (1 - X) ** j for j in range(k - m + 1))
    right = _poly([binom(k - m, j - m) * binom(k + m, j) for j in range(m, k + 1)])
    return left, right


@identity(
    "central_square_expansion",
    "sum_j (-1)^j C(k,j) C(2k-j,k) (1-x)^j = sum_j C(k,j)^2 x^j",
    ranges={"k": (0, 10)},
)
def _central_square_expansion(k):
    left = sum((-1) ** j * binom(k, j) * binom(2 * k - j, k) * (1 - X) ** j for j in range(k + 1))
    return left, _poly([binom(k, j) ** 2 for j in range(k + 1)])


@identity(
    "two_parameter_expansion",
    "sum_j C(n,j) C(n+2m+c,j+m) z^j = sum_j C(n,j) C(2n+2m+c-j,n+m) (z-1)^j",
    ranges={"n": (0, 5), "m": (0, 4), "c": (0, 4)},
)
def _two_parameter_expansion(n, m, c):
    left = sum(binom(n, j) * binom(n + 2 * m + c, j + m) * Z**j for j in range(n + 1))
    right = sum(binom(n, j) * binom(2 * n + 2 * m + c - j, n + m) * (Z - 1) ** j for j in range(n + 1))
    return left, right


def kernel_closed(n: int, j: int, k: int) -> Poly:
    """``b(n,j,x) = sum_i C(j+k-n,k-i) C(n,i) x^i``."""
    return _poly([binom(j + k - n, k - i) * binom(n, i) for i in range(n + 1)])


def kernel_from_derivative(n: int, j: int, k: int, order: int) -> TruncSeries:
    """``(1-x)^(k+j+1) (D^j/j!) [x^n / (1-x)^(k+1)]`` as a truncated series."""
    base = _series(lambda m: binom(m - n + k, k) if m >= n else 0, order + j)
    return base.divided_derivative(j) * (1 - X) ** (k + j + 1)


@identity(
    "derivative_kernel",
    "(1-x)^(k+j+1) D^j/j! [x^n/(1-x)^(k+1)] = sum_i C(j+k-n,k-i) C(n,i) x^i for n <= k",
    ranges={"n": (0, 5), "j": (0, 5), "k": (0, 6)},
    admissible=lambda n, j, k: n <= k,
    options={"order": 20},
)
def _derivative_kernel(n, j, k, order):
    return kernel_from_derivative(n, j, k, order), _window(kernel_closed(n, j, k), order)


@identity(
    "derivative_kernel_recurrence",
    "b(n,j) = x b(n-1,j) + (1-x) b(n-1,j-1)",
    ranges={"n": (1, 6), "j": (1, 6), "k": (1, 6)},
    admissible=lambda n, j, k: n <= k,
)
def _derivative_kernel_recurrence(n, j, k):
    return kernel_closed(n, j, k), X * kernel_closed(n - 1, j, k) + (1 - X) * kernel_closed(n - 1, j - 1, k)


@identity(
    "narayana_shift_gf",
    "(1-x)^(2k-1) sum C(n+k,k) C(n+k-1,k-2) x^(n+1) = sum_i C(k-1,i-1) C(k-1,i) x^i",
    ranges={"k": (2, 7)},
    options={"order": 24},
)
def _narayana_shift_gf(k, order):
    terms = _series(lambda p: binom(p - 1 + k, k) * binom(p + k - 2, k - 2) if p >= 1 else 0, order)
    right = _poly([binom(k - 1, i - 1) * binom(k - 1, i) for i in range(k)])
    return terms * (1 - X) ** (2 * k - 1), _window(right, order)


@identity(
    "kernel_alternating_form",
    "sum_i C(j+m,k-i) C(k-m,i) x^i = sum_l (-1)^l C(k-m,l) C(k+j-l,j) (1-x)^l",
    ranges={"k": (0, 6), "m": (0, 6), "j": (0, 6)},
    admissible=lambda k, m, j: m <= k,
)
def _kernel_alternating_form(k, m, j):
    left = _poly([binom(j + m, k - i) * binom(k - m, i) for i in range(k - m + 1)])
    right = sum((-1) ** ell * binom(k - m, ell) * binom(k + j - ell, j) * (1 - X) ** ell for ell in range(k - m + 1))
    return left, right


@identity(
    "narayana_alternating",
    "(k+1) sum_i N_{k,i} x^i = sum_l (-1)^l C(k+1,l) C(2k-l,k) (1-x)^l",
    ranges={"k": (1, 10)},
)
def _narayana_alternating(k):
    left = (k + 1) * _poly([narayana(k, i) for i in range(k + 1)])
    right = sum((-1) ** ell * binom(k + 1, ell) * binom(2 * k - ell, k) * (1 - X) ** ell for ell in range(k + 2))
    return left, right


@identity("r_poly_forms", "C(j,l) C(j,l-1) = j N_{j,l} in both sums for r_j(x)", ranges={"j": (0, 12)})
def _r_poly_forms(j):
    return r_poly(j), r_poly_narayana(j)


@identity(
    "fibonacci_binomial_sum",
    "sum_k C(n-k,k) = sum_j (-1)^j C(n, floor((n+5j)/2))",
    ranges={"n": (0, 16)},
)
def _fibonacci_binomial_sum(n):
    left = sum(binom(n - k, k) for k in range(n // 2 + 1))
    right = sum((-1) ** (j % 2) * binom(n, (n + 5 * j) // 2) for j in range(-n - 1, n + 2))
    return left, right
