"""Command-line front-end for stripcomb."""

import argparse
import csv
import io
import json
import os
import sys
from typing import Any, Dict, List, Optional, Sequence

from dotenv import load_dotenv
from loguru import logger

from stripcomb import __version__
from stripcomb.errors import StripcombError
from stripcomb.exactmath.poly import subs, to_text
from stripcomb.formulas import a_count, a_count_z, a_poly, a_poly_z
from stripcomb.genfun.builders import dyck_gf, gf_corridor_t, gf_numbers, gf_weighted
from stripcomb.genfun.guess import characteristic_poly, guess_cfinite
from stripcomb.genfun.zfamily import FAMILIES, gf_z
from stripcomb.models.report import jsonable
from stripcomb.oeis.client import OeisClient, oeis_check, resolve_cache_dir
from stripcomb.oeis.generators import GENERATORS
from stripcomb.paths.corridor import corridor_table, corridor_table_t, table_rows
from stripcomb.paths.walks import walk_counts
from stripcomb.workflow import SUITES, run_workflow

FORMATS = ("text", "json", "csv")
DEFAULT_ORDER = 40


def _specialize(value: Any, t: Optional[int], z: Optional[int]) -> Any:
    if z is not None:
        value = subs(value, "z", z)
    if t is not None:
        value = subs(value, "t", t)
    return value


def _csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows([["" if v is None else to_text(v) for v in row] for row in rows])
    return out.getvalue().rstrip("\n")


def _emit(fmt: str, header: Sequence[str], rows: List[List[Any]], text: Optional[str] = None) -> None:
    """Print rows as text, a JSON array of objects, or CSV with a header line."""
    if fmt == "json":
        print(json.dumps([jsonable(dict(zip(header, row))) for row in rows], indent=2))
    elif fmt == "csv":
        print(_csv(header, rows))
    elif text is not None:
        print(text)
    else:
        for row in rows:
            print(" ".join(to_text(v) for v in row))


def cmd_count(args: argparse.Namespace) -> int:
    if args.t is None and args.z is None:
        value: Any = a_count(args.n, args.k)
    elif args.t is None:
        value = a_count_z(args.n, args.k, args.z)
    else:
        value = _specialize(a_poly(args.n, args.k) if args.z is None else a_poly_z(args.n, args.k), args.t, args.z)
    _emit(args.format, ["n", "k", "value"], [[args.n, args.k, value]], text=to_text(value))
    return 0


def cmd_poly(args: argparse.Namespace) -> int:
    value = a_poly(args.n, args.k) if args.z is None else _specialize(a_poly_z(args.n, args.k), None, args.z)
    _emit(args.format, ["n", "k", "poly"], [[args.n, args.k, value]], text=to_text(value))
    return 0


def _named_gf(args: argparse.Namespace):
    k = args.strip if args.strip is not None else args.k
    if k is None:
        raise StripcombError("series needs --strip or --k")
    if args.gf == "numbers":
        return gf_numbers(k)
    if args.gf == "weighted":
        return gf_weighted(k)
    if args.gf == "corridor":
        return gf_corridor_t(k)
    if args.gf == "dyck":
        return dyck_gf(k)
    return gf_z(k, args.which)


def cmd_series(args: argparse.Namespace) -> int:
    named = _named_gf(args)
    logger.debug(f"Expanding {named.label} = {named.to_text()}")
    series = named.series(args.order)
    rows = [[n, _specialize(c, args.t, args.z)] for n, c in enumerate(series)]
    _emit(args.format, ["n", "value"], rows)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    if args.kind == "corridor":
        table = corridor_table(args.n)
    elif args.kind == "corridor_t":
        table = corridor_table_t(args.n, args.k)
    else:
        if args.k is None:
            raise StripcombError("--kind walks needs --k")
        table = [list(walk_counts(n, args.k)) for n in range(args.n + 1)]
    if args.format == "json":
        print(json.dumps(jsonable(table), indent=2))
    else:
        print(table_rows(table).rstrip("\n"))
    return 0


def cmd_guess(args: argparse.Namespace) -> int:
    source = a_poly if args.weighted else a_count
    seq = [source(n, args.strip) for n in range(args.terms)]
    fit = guess_cfinite(seq, args.max_order, args.offset)
    if fit is None:
        _emit(args.format, ["order", "char_poly", "offset"], [], text="none")
        return 0
    row = [fit.order, characteristic_poly(fit), fit.offset]
    _emit(args.format, ["order", "char_poly", "offset"], [row], text=fit.to_text())
    return 0


def cmd_oeis(args: argparse.Namespace) -> int:
    if not args.all and not args.anum:
        raise StripcombError("oeis needs --anum or --all")
    client = OeisClient(cache_dir=resolve_cache_dir(args.cache_dir), online=args.online)
    anumbers = sorted(GENERATORS) if args.all else args.anum
    rows = []
    for anumber in anumbers:
        match = oeis_check(anumber, args.prefix, client)
        rows.append([match.anumber, match.generator, match.matched, match.compared, match.source, match.first_mismatch])
    header = ["anumber", "generator", "matched", "compared", "source", "first_mismatch"]
    text = "\n".join(
        f"{a} {'match' if ok else 'MISMATCH'} {g} ({n} terms, {src})"
        + ("" if ok else f" first differing index {idx}")
        for a, g, ok, n, src, idx in rows
    )
    _emit(args.format, header, rows, text=text)
    return 0 if all(row[2] for row in rows) else 1


def cmd_verify(args: argparse.Namespace) -> int:
    config: Dict[str, Any] = {
        "suite": args.suite,
        "jmax": args.jmax,
        "kmax": args.kmax,
        "nmax": args.nmax,
        "jobs": args.jobs,
        "cache_dir": resolve_cache_dir(args.cache_dir),
    }
    logger.info(f"Verifying suite {args.suite} (jmax={args.jmax}, kmax={args.kmax}, nmax={args.nmax})")
    final_state = run_workflow(config)

    reports = final_state.get("reports", [])
    try:
        with open(args.report, "w", encoding="utf-8") as f:
            json.dump([r.to_dict() for r in reports], f, indent=2)
        logger.info(f"Report saved to: {args.report}")
    except OSError as e:
        logger.error(f"Failed to save report: {str(e)}")

    for report in reports:
        print(f"{report.status.value} {report.id}")
        if not report.passed:
            print(json.dumps(jsonable(report.witness)))

    if final_state.get("errors"):
        logger.error("Errors encountered during verification:")
        for error in final_state["errors"]:
            logger.error(f"- {error['node']}: {error['error']}")
    return final_state.get("exit_code", 1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stripcomb", description="Exact counting of lattice paths in strips")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--verbose", action="store_true", help="Enable verbose logging")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_format(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("--format", choices=FORMATS, default="text", help="Output format")
        return p

    p = with_format(sub.add_parser("count", help="a(n,k), optionally at integer t and z"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, help="Evaluate the extremal-point weight at this t")
    p.add_argument("--z", type=int, help="Evaluate the final-height grading at this z")
    p.set_defaults(func=cmd_count)

    p = with_format(sub.add_parser("poly", help="Weight polynomial a(n,k,t)"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--z", type=int, help="Specialize a(n,k,t,z) at this z")
    p.set_defaults(func=cmd_poly)

    p = with_format(sub.add_parser("series", help="Series coefficients of a generating function"))
    p.add_argument("--gf", choices=("numbers", "weighted", "corridor", "z", "dyck"), required=True)
    p.add_argument("--strip", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--which", choices=FAMILIES, default="conj4", help="z-family for --gf z")
    p.add_argument("--t", type=int)
    p.add_argument("--z", type=int)
    p.set_defaults(func=cmd_series)

    p = with_format(sub.add_parser("table", help="Corridor or walk tables as CSV"))
    p.add_argument("--kind", choices=("corridor", "corridor_t", "walks"), required=True)
    p.add_argument("--n", type=int, required=True, help="Last row")
    p.add_argument("--k", type=int, help="Bound for corridor_t, strip parameter for walks")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="Run the identity, q and conjecture suites")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--jmax", type=int, default=3)
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--nmax", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache-dir", type=str)
    p.add_argument("--report", type=str, default="stripcomb-report.json", help="Where to write the JSON report")
    p.set_defaults(func=cmd_verify)

    p = with_format(sub.add_parser("oeis", help="Compare generated prefixes with OEIS terms"))
    p.add_argument("--anum", action="append", help="A-number to check; repeatable")
    p.add_argument("--all", action="store_true", help="Check every registered A-number")
    p.add_argument("--prefix", type=int, default=20)
    p.add_argument("--online", action="store_true", help="Fetch b-files from oeis.org")
    p.add_argument("--cache-dir", type=str)
    p.set_defaults(func=cmd_oeis)

    p = with_format(sub.add_parser("guess", help="Guess a constant-coefficient recurrence"))
    p.add_argument("--strip", type=int, required=True)
    p.add_argument("--weighted", action="store_true", help="Use a(n,k,t) instead of a(n,k)")
    p.add_argument("--terms", type=int, default=30)
    p.add_argument("--max-order", type=int, default=8)
    p.add_argument("--offset", type=int, default=0)
    p.set_defaults(func=cmd_guess)

    return parser


def main(argv: Optional[List[str]] = None) -> None:
    parser = build_parser()
    args = parser.parse_args(argv)

    load_dotenv()
    if not args.verbose:
        logger.remove()
        logger.add(sys.stderr, level="INFO")
    if os.getenv("STRIPCOMB_DEBUG") == "1":
        logger.debug("STRIPCOMB_DEBUG is set; polynomial families re-verify their recurrences")

    try:
        code = args.func(args)
    except StripcombError as e:
        logger.error(str(e))
        sys.exit(2)
    sys.exit(code)


if __name__ == "__main__":
    main()
