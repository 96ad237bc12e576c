"""Command-line front end.

Subcommands: ``ng`` (per-genus totals), ``strata`` (the genus-by-even-gap
matrix), ``fgamma`` (stable stratum counts by one or all routes),
``bounds``, ``ratios`` (growth diagnostics), and ``verify`` (the
exhaustive check families).  Exit codes: 0 success, 2 invariant violation,
3 cache conflict, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import __version__
from .cache import ENV_CACHE_PATH, CensusCache, CensusRecord
from .closedsets import (
    CLOSED_SETS_CAP,
    DIRECT_CENSUS_CAP,
    FIBER_CAP,
    bounds,
    stable_count_by_census,
    stable_count_by_closed_sets,
    stable_count_by_fibers,
)
from .errors import BudgetExceeded, CacheConflict
from .ratios import PHI_SQUARED, build_ratio_rows, format_ratio
from .render import FORMATS, Table, render
from .tree import StratumRow, census
from .verify import run_all

_METHODS = ("direct", "closed-sets", "fibers")


def _add_common(parser: argparse.ArgumentParser, with_cache: bool = False) -> None:
    parser.add_argument("--format", choices=FORMATS, default="md")
    parser.add_argument("--workers", type=int, default=None,
                        help="parallel workers (default: machine parallelism)")
    parser.add_argument("--budget", type=int, default=None, metavar="NODES",
                        help="abort after visiting this many search nodes")
    if with_cache:
        parser.add_argument("--cache", default=None, metavar="PATH",
                            help=f"census row cache (or ${ENV_CACHE_PATH})")


def _workers(args) -> int:
    return os.cpu_count() or 1 if args.workers is None else args.workers


def _census_rows(max_genus: int, args) -> list[StratumRow]:
    path = getattr(args, "cache", None) or os.environ.get(ENV_CACHE_PATH)
    if not path:
        return census(max_genus, workers=_workers(args), budget=args.budget)
    cache = CensusCache(path)
    records = cache.load()
    if all(g in records for g in range(max_genus + 1)):
        return [records[g].to_row() for g in range(max_genus + 1)]
    started = time.perf_counter()
    rows = census(max_genus, workers=_workers(args), budget=args.budget)
    meta = {
        "version": __version__,
        "seconds": round(time.perf_counter() - started, 3),
        "workers": _workers(args),
    }
    fresh = []
    for row in rows:
        known = records.get(row.genus)
        if known is not None:
            if known.counts != row.counts:
                raise CacheConflict(
                    f"cached row for genus {row.genus} disagrees with recomputation"
                )
        else:
            fresh.append(CensusRecord.from_row(row, meta))
    cache.append(fresh)
    return rows


def _emit(table: Table, fmt: str) -> None:
    sys.stdout.write(render(table, fmt))


def cmd_ng(args) -> int:
    rows = _census_rows(args.max_genus, args)
    table = Table(("genus", "count"), [(r.genus, r.total) for r in rows])
    _emit(table, args.format)
    return 0


def cmd_strata(args) -> int:
    rows = _census_rows(args.max_genus, args)
    top = 2 * args.max_genus // 3
    columns = ("genus",) + tuple(str(k) for k in range(top + 1))
    body = []
    for r in rows:
        padded = r.counts + (None,) * (top + 1 - len(r.counts))
        body.append((r.genus,) + padded)
    _emit(Table(columns, body), args.format)
    return 0


def _route_values(method: str, max_gamma: int, args) -> list[int | None]:
    caps = {
        "direct": DIRECT_CENSUS_CAP,
        "closed-sets": CLOSED_SETS_CAP,
        "fibers": FIBER_CAP,
    }
    routes = {
        "direct": lambda k: stable_count_by_census(k, budget=args.budget),
        "closed-sets": lambda k: stable_count_by_closed_sets(
            k, workers=_workers(args), budget=args.budget
        ),
        "fibers": lambda k: stable_count_by_fibers(k, budget=args.budget),
    }
    values: list[int | None] = []
    for k in range(max_gamma + 1):
        values.append(routes[method](k) if k <= caps[method] else None)
    return values


def cmd_fgamma(args) -> int:
    if args.method != "all":
        caps = {"direct": DIRECT_CENSUS_CAP, "closed-sets": CLOSED_SETS_CAP,
                "fibers": FIBER_CAP}
        if args.max_gamma > caps[args.method]:
            raise BudgetExceeded(
                f"{args.method} route capped at gamma <= {caps[args.method]}"
            )
        values = _route_values(args.method, args.max_gamma, args)
        table = Table(("gamma", args.method),
                      [(k, v) for k, v in enumerate(values)])
        _emit(table, args.format)
        return 0
    per_method = {m: _route_values(m, args.max_gamma, args) for m in _METHODS}
    body = []
    conflict = None
    for k in range(args.max_gamma + 1):
        cells = [per_method[m][k] for m in _METHODS]
        body.append((k, *cells))
        computed = {v for v in cells if v is not None}
        if len(computed) > 1 and conflict is None:
            conflict = (k, cells)
    _emit(Table(("gamma", *_METHODS), body), args.format)
    if conflict is not None:
        print(
            f"error: routes disagree at gamma={conflict[0]}: {conflict[1]}",
            file=sys.stderr,
        )
        return 2
    return 0


def cmd_bounds(args) -> int:
    body = []
    for k in range(args.max_gamma + 1):
        row = bounds(k)
        value = (
            stable_count_by_closed_sets(k, workers=_workers(args),
                                        budget=args.budget)
            if k <= CLOSED_SETS_CAP
            else None
        )
        body.append((k, row.refined_lower, value, row.refined_upper))
    _emit(Table(("gamma", "lower", "fgamma", "upper"), body), args.format)
    return 0


def cmd_ratios(args) -> int:
    if args.max_gamma > CLOSED_SETS_CAP:
        raise BudgetExceeded(f"ratios need gamma <= {CLOSED_SETS_CAP}")
    values = [
        stable_count_by_closed_sets(k, workers=_workers(args), budget=args.budget)
        for k in range(args.max_gamma + 1)
    ]
    totals = [r.total for r in _census_rows(2 * args.max_gamma, args)]
    rows = build_ratio_rows(values, totals)
    body = [
        (
            r.gamma,
            r.value,
            r.census_at_double,
            format_ratio(r.ratio_prev) or None,
            format_ratio(r.ratio_census),
            format_ratio(r.ratio_partial_sum) or None,
        )
        for r in rows
    ]
    table = Table(
        ("gamma", "fgamma", "n_2gamma", "step_ratio", "census_ratio", "sum_ratio"),
        body,
        notes=(f"reference: phi^2 = {PHI_SQUARED:.3f}",),
    )
    _emit(table, args.format)
    return 0


def cmd_verify(args) -> int:
    results = run_all(
        args.max_genus, args.max_gamma, workers=_workers(args), budget=args.budget
    )
    failed = 0
    for result in results:
        print(result.line())
        failed += not result.passed
    if failed:
        print(f"{failed} of {len(results)} families failed", file=sys.stderr)
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evengap",
        description="Census of numerical semigroups stratified by even gaps.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ng", help="per-genus totals")
    p.add_argument("--max-genus", type=int, default=16)
    _add_common(p, with_cache=True)
    p.set_defaults(func=cmd_ng)

    p = sub.add_parser("strata", help="genus-by-even-gap-count matrix")
    p.add_argument("--max-genus", type=int, default=16)
    _add_common(p, with_cache=True)
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("fgamma", help="stable stratum counts")
    p.add_argument("--max-gamma", type=int, default=8)
    p.add_argument("--method", choices=_METHODS + ("all",), default="all")
    _add_common(p)
    p.set_defaults(func=cmd_fgamma)

    p = sub.add_parser("bounds", help="brackets for the stable counts")
    p.add_argument("--max-gamma", type=int, default=9)
    _add_common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("ratios", help="growth diagnostics")
    p.add_argument("--max-gamma", type=int, default=8)
    _add_common(p, with_cache=True)
    p.set_defaults(func=cmd_ratios)

    p = sub.add_parser("verify", help="run the exhaustive check families")
    p.add_argument("--max-genus", type=int, default=14)
    p.add_argument("--max-gamma", type=int, default=6)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except CacheConflict as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
