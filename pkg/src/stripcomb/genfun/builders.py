"""Rational generating functions for counts, weights, corridors and continued fractions."""

from typing import Any, Callable, Sequence, Tuple, Union

from loguru import logger

from stripcomb.classic.families import fib_at, lambda_poly, lucas_at, phi_poly
from stripcomb.errors import ParameterRangeError
from stripcomb.exactmath.poly import T, X, Poly, coeff, subs
from stripcomb.exactmath.series import RatFunc, TruncSeries
from stripcomb.formulas import a_count, a_poly
from stripcomb.models.genfun import NamedGF
from stripcomb.models.report import ConjectureReport, check_grid, mismatch
from stripcomb.paths.corridor import corridor_table_t
from stripcomb.paths.walks import bounded_dyck

Oracle = Union[Sequence[Any], Callable[[int], Any]]


def _named(label: str, num: Any, den: Any, ring: str = "Z") -> NamedGF:
    return NamedGF(label, RatFunc(num, den).normalized(), ring)


def gf_numbers(k: int) -> NamedGF:
    """``sum a(n,k) x^n`` as a quotient of Fibonacci and Lucas polynomials at ``(1, -x^2)``."""
    if k < 0:
        raise ParameterRangeError(f"strip parameter must be nonnegative, got {k}")
    half = k // 2
    if k % 2:
        return _named(f"numbers:{k}", fib_at(half + 1), fib_at(half + 2) - X * fib_at(half + 1))
    return _named(f"numbers:{k}", fib_at(half + 1) + X * fib_at(half), lucas_at(half + 1))


def odd_strip_parts(k: int) -> Tuple[Any, Any]:
    """Numerator and denominator of ``sum a(n,2k+1,t) x^n``; ``k = 0`` uses ``1/(1-x)``."""
    if k == 0:
        return 1, 1 - X
    num = phi_poly(k) - X**2 * phi_poly(k - 1)
    den = phi_poly(k + 1) - X * (X + 1) * phi_poly(k) + X**3 * phi_poly(k - 1)
    return num, den


def even_strip_parts(k: int) -> Tuple[Any, Any]:
    """Numerator and denominator of ``sum a(n,2k,t) x^n`` for ``k >= 1``."""
    num = (1 + X) * phi_poly(k) - X**2 * (1 + (1 - T) * X) * phi_poly(k - 1)
    den = lambda_poly(k) - X**2 * lambda_poly(k - 1)
    return num, den


def gf_weighted(strip: int) -> NamedGF:
    """``sum a(n,strip,t) x^n`` over Z[t], built from the Φ and Λ families."""
    if strip < 1:
        raise ParameterRangeError(f"weighted generating functions need strip >= 1, got {strip}")
    if strip % 2:
        num, den = odd_strip_parts(strip // 2)
    else:
        num, den = even_strip_parts(strip // 2)
    return _named(f"weighted:{strip}", num, den, "Z[t]")


def corridor_cd(n: int) -> Tuple[Any, Any]:
    """The pair ``(c(n,x,t), d(n,x,t))`` of the bounded corridor recurrences."""
    if n < 0:
        raise ParameterRangeError(f"corridor index must be nonnegative, got {n}")
    c_prev, c_cur = 0, 1
    d_prev, d_cur = 1, 1 - X
    for m in range(1, n + 1):
        factor = X**2 if m % 2 == 0 else T * X**2
        c_prev, c_cur = c_cur, c_cur - factor * c_prev
        d_prev, d_cur = d_cur, d_cur - factor * d_prev
    return c_cur, d_cur


def gf_corridor_t(k: int) -> NamedGF:
    """``sum c(n,0,t,2k+1) x^n = c(k,x,t)/d(k,x,t)``."""
    c, d = corridor_cd(k)
    return _named(f"corridor:{k}", c, d, "Z[t]")


def dyck_gf(k: int) -> NamedGF:
    """Dyck paths of height at most k: ``F_{k+1}(1,-x^2) / F_{k+2}(1,-x^2)``."""
    if k < 0:
        raise ParameterRangeError(f"height bound must be nonnegative, got {k}")
    return _named(f"dyck:{k}", fib_at(k + 1), fib_at(k + 2))


def continued_fraction_gf(depth: int, flavor: str = "dyck") -> NamedGF:
    """Build a generating function by iterating its continued fraction ``depth`` times.

    ``dyck`` iterates ``v -> 1/(1 - x^2 v)`` from ``v = 1``; ``odd`` iterates
    ``g -> 1/(1 - x/(1 - x g(-x)))`` from ``g = 1/(1-x)``, reaching the strip
    ``2*depth + 1``.
    """
    if depth < 0:
        raise ParameterRangeError(f"depth must be nonnegative, got {depth}")
    if flavor == "dyck":
        value = RatFunc(1)
        for _ in range(depth):
            value = 1 / (1 - X**2 * value)
    elif flavor == "odd":
        value = RatFunc(1, 1 - X)
        for _ in range(depth):
            value = 1 / (1 - X / (1 - X * value.reflect()))
    else:
        raise ParameterRangeError(f"unknown continued fraction flavor {flavor!r}")
    return NamedGF(f"cf_{flavor}:{depth}", value.normalized())


def decomposition_gf(k: int) -> NamedGF:
    """First-return decomposition ``v_k(x) (1 + x a_{k-1}(x))`` of the strip-k counts."""
    if k < 1:
        raise ParameterRangeError(f"decomposition needs k >= 1, got {k}")
    value = dyck_gf(k).ratfunc * (1 + X * gf_numbers(k - 1).ratfunc)
    return NamedGF(f"decomposition:{k}", value.normalized())


def series_check(named: NamedGF, oracle: Oracle, order: int) -> ConjectureReport:
    """Compare the series of ``named`` against ``oracle`` term by term up to ``order``."""
    series: TruncSeries = named.series(order)
    value = oracle if callable(oracle) else oracle.__getitem__
    cells = ({"n": n} for n in range(order + 1))

    def check(cell):
        return mismatch(value(cell["n"]), series[cell["n"]])

    report = check_grid(f"series:{named.label}", {"order": order}, cells, check)
    if not report.passed:
        logger.error(f"Series of {named.label} differs from its oracle at n={report.witness['params']['n']}")
    return report


def first_terms_odd(k: int) -> Poly:
    """Claimed ``t^1`` part of the odd-strip denominator."""
    tail = sum((k - 1 - j) * X ** (2 * j) for j in range(k - 1))
    return -k * X**2 + (1 - X) * X**3 * tail


def first_terms_even(k: int) -> Poly:
    """Claimed ``t^1`` part of the even-strip denominator."""
    return -k * X**2 - sum(X ** (2 * j) for j in range(2, k + 1))


def denominator_first_terms_check(k_max: int = 6) -> ConjectureReport:
    """Check the ``t^0`` and ``t^1`` parts of both weighted denominators for ``k <= k_max``."""
    cells = ({"parity": parity, "k": k} for parity in ("odd", "even") for k in range(k_max + 1))

    def check(cell):
        k = cell["k"]
        if cell["parity"] == "odd":
            den = odd_strip_parts(k)[1]
            expected = (1 - X, first_terms_odd(k))
        else:
            if k == 0:
                return None
            den = even_strip_parts(k)[1]
            expected = (1 - X**2, first_terms_even(k))
        actual = (coeff(den, "t", 0), coeff(den, "t", 1))
        return mismatch(expected, actual)

    return check_grid("denominator_first_terms", {"k": [0, k_max]}, cells, check)


def stability_check(k_max: int = 5) -> ConjectureReport:
    """``a(n,2k+1,t) = a(n,2k+3,t)`` whenever ``n <= 2k+1``."""
    cells = ({"k": k, "n": n} for k in range(k_max + 1) for n in range(2 * k + 2))
    return check_grid(
        "stability",
        {"k": [0, k_max]},
        cells,
        lambda c: mismatch(a_poly(c["n"], 2 * c["k"] + 1), a_poly(c["n"], 2 * c["k"] + 3)),
    )


def numbers_series_check(k: int, order: int = 30) -> ConjectureReport:
    report = series_check(gf_numbers(k), lambda n: a_count(n, k), order)
    report.grid = {"k": k, **report.grid}
    return report


def weighted_series_check(strip: int, order: int = 30) -> ConjectureReport:
    report = series_check(gf_weighted(strip), lambda n: a_poly(n, strip), order)
    report.grid = {"strip": strip, **report.grid}
    return report


def corridor_series_check(k: int, order: int = 16) -> ConjectureReport:
    """Series of ``gf_corridor_t(k)`` against the bounded corridor triangle."""
    table = corridor_table_t(order, bound=k)
    report = series_check(gf_corridor_t(k), lambda n: table[n][0], order)
    report.grid = {"k": k, **report.grid}
    return report


def dyck_series_check(k: int, order: int = 24) -> ConjectureReport:
    report = series_check(dyck_gf(k), lambda n: 0 if n % 2 else bounded_dyck(n, k), order)
    report.grid = {"k": k, **report.grid}
    return report


def rational_identities_check(k_max: int = 6) -> ConjectureReport:
    """Cross-multiplied equalities between the rational generating functions.

    Covers the t=1 specialization of the weighted functions, the corridor
    denominators at t=1, both continued fractions and the first-return
    decomposition.
    """
    cells = []
    for k in range(k_max + 1):
        cells += [
            {"identity": "weighted_at_t1", "strip": 2 * k + 1},
            {"identity": "corridor_den_at_t1", "k": k},
            {"identity": "cf_dyck", "depth": k},
            {"identity": "cf_odd", "depth": k},
        ]
        if k >= 1:
            cells += [{"identity": "weighted_at_t1", "strip": 2 * k}, {"identity": "decomposition", "k": k}]

    def check(cell):
        name = cell["identity"]
        if name == "weighted_at_t1":
            left, right = gf_weighted(cell["strip"]).ratfunc.subs("t", 1), gf_numbers(cell["strip"]).ratfunc
        elif name == "corridor_den_at_t1":
            k = cell["k"]
            left, right = subs(corridor_cd(k)[1], "t", 1), fib_at(k + 2) - X * fib_at(k + 1)
        elif name == "cf_dyck":
            left, right = continued_fraction_gf(cell["depth"], "dyck").ratfunc, dyck_gf(cell["depth"]).ratfunc
        elif name == "cf_odd":
            left, right = continued_fraction_gf(cell["depth"], "odd").ratfunc, gf_numbers(2 * cell["depth"] + 1).ratfunc
        else:
            left, right = decomposition_gf(cell["k"]).ratfunc, gf_numbers(cell["k"]).ratfunc
        return None if left == right else {"expected": right, "actual": left}

    return check_grid("rational_identities", {"k": [0, k_max]}, cells, check)
