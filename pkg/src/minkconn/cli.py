"""Command-line front end.

Graphs are read as graph6 lines from ``--input`` or standard input (or given
as positional arguments to the single-graph commands). Records are written as
JSON Lines, summaries as a single JSON object. Exit status: 0 on success,
1 when a verification fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, TextIO

from .connectivity import KINDS, VERTEX, certify_minimality, connectivity
from .graph import FAMILIES, Graph, GraphError, Graph6Error, encode_graph6, enumerate_graphs, make_family, mask_of, read_graph6_lines
from .rewire import certify_rayleigh_increase, rewire_to_L
from .scan import SUITES, ScanError, scan_lines, verify_lines
from .spectral import DEFAULT_TOL, ConvergenceError, spectral_radius

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _dump(obj, out: TextIO, fmt: str) -> None:
    if fmt == "tsv":
        for key, value in obj.items():
            if not isinstance(value, (str, int, float, bool)) and value is not None:
                value = json.dumps(value, separators=(",", ":"))
            out.write(f"{key}\t{value}\n")
    else:
        out.write(json.dumps(obj) + "\n")


def _dump_rows(rows: list[dict], out: TextIO, fmt: str) -> None:
    if fmt != "tsv":
        for row in rows:
            out.write(json.dumps(row) + "\n")
        return
    if not rows:
        return
    keys = list(rows[0])
    out.write("\t".join(keys) + "\n")
    for row in rows:
        cells = []
        for key in keys:
            value = row[key]
            if isinstance(value, (list, dict)):
                value = json.dumps(value, separators=(",", ":"))
            cells.append("" if value is None else str(value))
        out.write("\t".join(cells) + "\n")


def _input_lines(args) -> Iterable[str]:
    if getattr(args, "graphs", None):
        return list(args.graphs)
    if args.input and args.input != "-":
        try:
            with open(args.input, encoding="ascii", errors="replace") as fh:
                return fh.read().splitlines()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    return sys.stdin.read().splitlines()


def _read_graphs(args) -> list[Graph]:
    """Strict reader for the single-graph commands: any bad line is a usage error."""
    graphs = []
    for lineno, item in read_graph6_lines(_input_lines(args)):
        if isinstance(item, Graph6Error):
            raise UsageError(f"line {lineno}: {item}")
        graphs.append(item)
    if not graphs:
        raise UsageError("no graphs on input")
    return graphs


def _report_parse_errors(errors, err: TextIO) -> None:
    for p in errors:
        err.write(f"line {p.line}: {p.message}\n")


# -- subcommands -----------------------------------------------------------------------

def cmd_gen(args, out, err) -> int:
    params = {}
    name = args.family.replace("-", "_")
    if name not in FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(sorted(f.replace('_', '-') for f in FAMILIES))}")
    if args.n is None:
        raise UsageError("gen needs --n")
    params["n"] = args.n
    if name in ("complete_bipartite", "k_appended"):
        if args.k is None:
            raise UsageError(f"family {args.family} needs --k")
        params["k"] = args.k
    out.write(encode_graph6(make_family(name, **params)) + "\n")
    return EXIT_OK


def cmd_check(args, out, err) -> int:
    k = _need_k(args)
    for g in _read_graphs(args):
        try:
            report = connectivity(g, args.mode).to_dict()
        except GraphError as exc:
            report = {"kind": args.mode, "value": None, "error": str(exc)}
        cert = certify_minimality(g, k, args.mode)
        _dump({"graph6": encode_graph6(g), "connectivity": report, "minimal": cert.valid, "certificate": cert.to_dict()}, out, args.output)
    return EXIT_OK


def cmd_rho(args, out, err) -> int:
    for g in _read_graphs(args):
        try:
            perron = spectral_radius(g, args.tol)
        except (ValueError, ConvergenceError) as exc:
            raise UsageError(f"{encode_graph6(g)}: {exc}") from None
        _dump({"graph6": encode_graph6(g), **perron.to_dict()}, out, args.output)
    return EXIT_OK


def cmd_rewire(args, out, err) -> int:
    k = _need_k(args)
    L = None
    if args.L:
        try:
            L = mask_of(int(v) for v in args.L.split(","))
        except ValueError:
            raise UsageError(f"--L must be a comma-separated vertex list, got {args.L!r}") from None
    for g in _read_graphs(args):
        try:
            perron = spectral_radius(g, args.tol)
        except (ValueError, ConvergenceError) as exc:
            raise UsageError(f"{encode_graph6(g)}: {exc}") from None
        plan = rewire_to_L(g, L, k)
        rayleigh = certify_rayleigh_increase(g, plan.result, perron.vector, plan)
        _dump({"graph6": encode_graph6(g), **plan.to_dict(), "rayleigh": rayleigh.to_dict()}, out, args.output)
    return EXIT_OK


def cmd_enumerate(args, out, err) -> int:
    if args.n is None:
        raise UsageError("enumerate needs --n")
    for g in enumerate_graphs(args.n, args.min_degree):
        out.write(encode_graph6(g) + "\n")
    return EXIT_OK


def cmd_scan(args, out, err) -> int:
    k = _need_k(args)
    report, records = scan_lines(_input_lines(args), k, args.mode, args.jobs, args.tol)
    if args.records:
        _dump_rows([r.to_dict() for r in records], out, args.output)
    _dump(report.to_dict(), out, args.output)
    _report_parse_errors(report.parse_errors, err)
    return EXIT_USAGE if report.parse_errors else EXIT_OK


def cmd_verify(args, out, err) -> int:
    k = _need_k(args)
    report, per_graph = verify_lines(_input_lines(args), args.suite, k, args.mode, args.jobs)
    _dump_rows([{"graph6": r["graph6"], "suite": r["suite"], "passed": r["passed"], "failures": r["failures"]} for r in per_graph], out, args.output)
    _dump(report.to_dict(), out, args.output)
    _report_parse_errors(report.parse_errors, err)
    if report.parse_errors:
        return EXIT_USAGE
    return EXIT_OK if report.ok else EXIT_FAILED


def _need_k(args) -> int:
    if args.k is None:
        raise UsageError(f"{args.command} needs --k")
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    return args.k


# -- parser ------------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--k", type=int)
    common.add_argument("--mode", choices=KINDS, default=VERTEX)
    common.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL)
    common.add_argument("--jobs", type=_positive_int, default=1)
    common.add_argument("--output", choices=("json", "tsv"), default="json")
    common.add_argument("--input", help="graph6 file; standard input when omitted or '-'")

    parser = _Parser(prog="minkconn", description="Minimally k-(edge)-connected graphs: connectivity, spectra, extremal scans.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", parents=[common], help="graph6 of a named family")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_gen)

    for name, func, text in (
        ("check", cmd_check, "connectivity and minimality certificate"),
        ("rho", cmd_rho, "spectral radius and Perron vector"),
        ("rewire", cmd_rewire, "peel-and-rewire onto a k-set"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("graphs", nargs="*", metavar="GRAPH6")
        p.set_defaults(func=func)
        if name == "rewire":
            p.add_argument("--L", help="comma-separated k-set; default is the k largest Perron coordinates")

    p = sub.add_parser("scan", parents=[common], help="extremal scan over a corpus")
    p.add_argument("--records", action="store_true", help="also emit one record per graph")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite over a corpus")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="one graph per isomorphism class")
    p.add_argument("--n", type=int)
    p.add_argument("--min-degree", type=int, default=0)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out, err)
    except (UsageError, ScanError, GraphError, Graph6Error) as exc:
        err.write(f"minkconn: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
