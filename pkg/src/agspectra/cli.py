"""Command-line front end: ``agspectra <subcommand> ...``.

Exit status is 0 on success, 1 when a verification check fails, and 2 for
usage or input errors.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

import numpy as np

from .enumerate import enumerate_bicyclic, enumerate_unicyclic, enumerate_unicyclic_with_max_degree
from .graph import Family, Graph, GraphError, build_family, from_graph6, read_edge_list, to_edge_list, to_graph6
from .spectral import char_poly, full_spectrum, spectral_radius
from .verify import SUITES, VerificationReport, explore_bicyclic, run_suite
from .weights import Scheme, weighted_adjacency


class InputError(Exception):
    pass


def _threads() -> int:
    raw = os.environ.get("AGSPECTRA_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise InputError(f"AGSPECTRA_THREADS must be an integer, got {raw!r}") from None


def _claim_key(claim: str) -> list:
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", claim)]


def _fmt(x: float, precision: str, default: int) -> str:
    if precision == "full":
        return repr(float(x))
    digits = default if precision == "default" else int(precision)
    s = f"{x:.{digits}f}"
    if s.startswith("-") and float(s) == 0.0:
        s = s[1:]
    return s


def _graph_from_args(args) -> Graph:
    sources = [args.graph6 is not None, args.family is not None, args.edges is not None]
    if sum(sources) != 1:
        raise InputError("give exactly one of --graph6, --family/--n, --edges")
    if args.graph6 is not None:
        return from_graph6(args.graph6)
    if args.family is not None:
        if args.n is None:
            raise InputError("--family needs --n")
        return build_family(args.family, args.n)
    if args.edges == "-":
        return read_edge_list(sys.stdin)
    try:
        with open(args.edges) as fh:
            return read_edge_list(fh)
    except OSError as exc:
        raise InputError(f"cannot read {args.edges}: {exc.strerror}") from None


def _matrix(args) -> np.ndarray:
    g = _graph_from_args(args)
    if not g.is_connected():
        raise InputError("graph is not connected")
    return weighted_adjacency(g, args.scheme)


def _emit_graph(g: Graph, fmt: str) -> None:
    if fmt == "graph6":
        print(to_graph6(g))
    else:
        print(to_edge_list(g))


def cmd_radius(args) -> int:
    M = _matrix(args)
    rho = full_spectrum(M).radius
    if args.check:
        other = spectral_radius(M)
        if abs(other - rho) > 1e-9:
            print(f"eigensolvers disagree: Jacobi {rho!r}, power {other!r}", file=sys.stderr)
            return 1
    print(_fmt(rho, args.precision, 10))
    return 0


def cmd_spectrum(args) -> int:
    for lam in full_spectrum(_matrix(args)).eigenvalues:
        print(_fmt(lam, args.precision, 10))
    return 0


def cmd_charpoly(args) -> int:
    print(" ".join(_fmt(c, args.precision, 10) for c in char_poly(_matrix(args))))
    return 0


def cmd_enumerate(args) -> int:
    if args.graph_class == "bicyclic":
        if args.max_degree is not None:
            raise InputError("--max-degree applies to unicyclic graphs only")
        graphs = enumerate_bicyclic(args.n)
    elif args.max_degree is not None:
        graphs = enumerate_unicyclic_with_max_degree(args.n, args.max_degree)
    else:
        graphs = enumerate_unicyclic(args.n)
    for g in graphs:
        _emit_graph(g, args.format)
    return 0


def cmd_family(args) -> int:
    _emit_graph(build_family(args.name, args.n), args.format)
    return 0


def _report_value(v, precision: str) -> str:
    if v is None:
        return "-"
    if isinstance(v, float):
        return _fmt(v, precision, 4)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_report_value(x, precision) for x in v) + "]"
    return str(v)


def _print_text(reports: list[VerificationReport], precision: str, timing: bool) -> None:
    rows = [(r.claim, r.status.upper(), _report_value(r.computed, precision),
             _report_value(r.expected, precision), _report_value(r.tolerance, "full"), r.detail)
            for r in reports]
    w0 = max(len(r[0]) for r in rows)
    for r, rep in zip(rows, reports):
        line = f"{r[0]:<{w0}}  {r[1]:<7}  computed={r[2]}  expected={r[3]}  tol={r[4]}"
        if timing and rep.runtime_ms is not None:
            line += f"  ({rep.runtime_ms:.1f} ms)"
        if r[5]:
            line += f"  # {r[5]}"
        print(line)


def cmd_verify(args) -> int:
    suites = list(SUITES) if "all" in args.suite else args.suite
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        results = list(pool.map(lambda s: run_suite(s, args.n_max), suites))
    reports = sorted((r for rs in results for r in rs), key=lambda r: _claim_key(r.claim))
    passed = all(r.ok for r in reports)
    if args.json:
        doc = {"suites": suites, "passed": passed,
               "reports": [r.to_dict(timing=args.timing) for r in reports]}
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        _print_text(reports, args.precision, args.timing)
        print(f"{sum(r.status == 'pass' for r in reports)} passed, "
              f"{sum(r.status == 'fail' for r in reports)} failed, "
              f"{sum(r.status in ('skipped', 'report') for r in reports)} skipped/report-only")
    return 0 if passed else 1


def cmd_explore_bicyclic(args) -> int:
    rk = explore_bicyclic(args.n, args.top)
    if args.json:
        print(json.dumps(rk.to_dict(), indent=2, sort_keys=True))
        return 0
    print(f"n={rk.n}  bicyclic classes={rk.class_size}")
    for i, e in enumerate(rk.top, 1):
        print(f"{i:>3}  {e.graph6:<12}  rho_ag={_fmt(e.radius, args.precision, 10)}  max_degree={e.max_degree}")
    e = rk.minimum
    print(f"min  {e.graph6:<12}  rho_ag={_fmt(e.radius, args.precision, 10)}  max_degree={e.max_degree}")
    return 0


def _precision(value: str) -> str:
    if value in ("full", "default"):
        return value
    if value.isdigit():
        return value
    raise argparse.ArgumentTypeError("precision is 'full' or a number of decimals")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="agspectra", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_source(p):
        p.add_argument("--scheme", choices=[s.value for s in Scheme], default="ag")
        p.add_argument("--graph6")
        p.add_argument("--family", choices=[f.value for f in Family])
        p.add_argument("--n", type=int)
        p.add_argument("--edges", metavar="FILE", help="edge-list file ('-' for stdin)")
        p.add_argument("--precision", type=_precision, default="default")

    p = sub.add_parser("radius", help="largest eigenvalue of a weighted adjacency matrix")
    graph_source(p)
    p.add_argument("--check", action="store_true", help="cross-check against power iteration")
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("spectrum", help="all eigenvalues, descending")
    graph_source(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("charpoly", help="monic characteristic polynomial coefficients, highest first")
    graph_source(p)
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("enumerate", help="isomorphism classes, one per line (graph6)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="graph_class", choices=["unicyclic", "bicyclic"], default="unicyclic")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--format", choices=["graph6", "edges"], default="graph6")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("family", help="print a named unicyclic graph")
    p.add_argument("--name", choices=[f.value for f in Family], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["graph6", "edges"], default="edges")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", action="append", choices=list(SUITES) + ["all"], required=True)
    p.add_argument("--n-max", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timing", action="store_true", help="include per-check runtimes (non-deterministic)")
    p.add_argument("--precision", type=_precision, default="default")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("explore-bicyclic", help="rank bicyclic graphs by AG radius")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--top", type=int, default=2)
    p.add_argument("--json", action="store_true")
    p.add_argument("--precision", type=_precision, default="default")
    p.set_defaults(func=cmd_explore_bicyclic)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GraphError, ValueError) as exc:
        print(f"agspectra: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
