"""Corpus scans: filter to minimally k-(edge)-connected graphs, find the
spectral and edge-count maxima, and run the structural verification suites.

Per-graph work is independent, so ``jobs > 1`` fans it out over processes;
reductions use a total order (rho, then canonical code) so the result does
not depend on scheduling.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable

from .connectivity import EDGE, VERTEX, certify_minimality, decompose, edge_connectivity, is_minimally_connected, vertex_connectivity
from .graph import (
    MAX_CANONICAL_N,
    Graph,
    Graph6Error,
    canonical_code,
    complete_bipartite,
    decode_graph6,
    encode_graph6,
    induced_subgraph,
    is_complete_bipartite,
    read_graph6_lines,
    vertices_of,
)
from .spectral import spectral_radius
from .structure import check_global_bounds, check_subgraph_bounds, degree_k_census, theorem_1_1_report

NEAR_TIE = 1e-9
SUBSET_SUITE_MAX_N = 12
SUITES = ("bounds-global", "bounds-subgraph", "degree-k", "forest", "heredity", "eigen-report", "decomposition")


class ScanError(ValueError):
    pass


@dataclass
class ParseFailure:
    line: int
    message: str


@dataclass
class ScanRecord:
    graph6: str
    n: int
    e: int
    kappa: int | None
    kappa_prime: int
    minimal: bool
    rho: float | None
    degree_k_count: int

    def to_dict(self) -> dict:
        return asdict(self)


def _canonical_form(g: Graph) -> tuple[str, Graph]:
    if g.n <= MAX_CANONICAL_N:
        code = canonical_code(g)
        return code, decode_graph6(code)
    return encode_graph6(g), g


def scan_record(g: Graph, k: int, mode: str, tol: float = 1e-12) -> ScanRecord:
    code, g = _canonical_form(g)
    kappa = vertex_connectivity(g).value if g.n >= 2 else None
    minimal = is_minimally_connected(g, k, mode)
    return ScanRecord(
        graph6=code,
        n=g.n,
        e=g.num_edges,
        kappa=kappa,
        kappa_prime=edge_connectivity(g).value,
        minimal=minimal,
        rho=spectral_radius(g, tol).rho if minimal else None,
        degree_k_count=degree_k_census(g, k),
    )


def _record_job(args) -> ScanRecord:
    text, k, mode, tol = args
    return scan_record(decode_graph6(text), k, mode, tol)


def parse_corpus(lines: Iterable[str | bytes]) -> tuple[list[Graph], list[ParseFailure]]:
    graphs, failures = [], []
    for lineno, item in read_graph6_lines(lines):
        if isinstance(item, Graph6Error):
            failures.append(ParseFailure(lineno, str(item)))
        else:
            graphs.append(item)
    return graphs, failures


def _map(fn, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(it) for it in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


@dataclass
class ExtremalReport:
    k: int
    mode: str
    n: int | None
    population: int
    argmax_rho: dict | None
    near_ties: list[dict]
    argmax_edges: dict | None
    max_edge_graphs: list[str]
    matches_Kknk: bool
    scanned: int = 0
    parse_errors: list[ParseFailure] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["parse_errors"] = [asdict(p) for p in self.parse_errors]
        return out


def _is_kknk(code: str, k: int) -> bool:
    g = decode_graph6(code)
    if not 1 <= k < g.n:
        return False
    if g.n <= MAX_CANONICAL_N:
        return code == canonical_code(complete_bipartite(k, g.n))
    return is_complete_bipartite(g, k)


def reduce_records(records: list[ScanRecord], k: int, mode: str) -> ExtremalReport:
    """Maxima over the minimal records; ties in rho go to the smaller graph6 code."""
    survivors = [r for r in records if r.minimal]
    n = records[0].n if records else None
    if not survivors:
        return ExtremalReport(k, mode, n, 0, None, [], None, [], False, len(records))
    best = survivors[0]
    for r in survivors[1:]:
        if r.rho > best.rho or (r.rho == best.rho and r.graph6 < best.graph6):
            best = r
    ties = sorted(
        (r for r in survivors if r is not best and best.rho - r.rho <= NEAR_TIE),
        key=lambda r: (-r.rho, r.graph6),
    )
    max_e = max(r.e for r in survivors)
    edge_max = sorted(r.graph6 for r in survivors if r.e == max_e)
    return ExtremalReport(
        k=k,
        mode=mode,
        n=n,
        population=len(survivors),
        argmax_rho={"graph6": best.graph6, "rho": best.rho},
        near_ties=[{"graph6": r.graph6, "rho": r.rho} for r in ties],
        argmax_edges={"graph6": edge_max[0], "e": max_e},
        max_edge_graphs=edge_max,
        matches_Kknk=_is_kknk(best.graph6, k),
        scanned=len(records),
    )


def scan_graphs(graphs: list[Graph], k: int, mode: str, jobs: int = 1, tol: float = 1e-12) -> tuple[ExtremalReport, list[ScanRecord]]:
    if k < 1:
        raise ScanError("k must be >= 1")
    if mode not in (VERTEX, EDGE):
        raise ScanError(f"mode must be 'vertex' or 'edge', got {mode!r}")
    sizes = {g.n for g in graphs}
    if len(sizes) > 1:
        raise ScanError(f"all graphs must share one vertex count, got {sorted(sizes)}")
    records = _map(_record_job, [(encode_graph6(g), k, mode, tol) for g in graphs], jobs)
    return reduce_records(records, k, mode), records


def scan_lines(lines: Iterable[str | bytes], k: int, mode: str, jobs: int = 1, tol: float = 1e-12) -> tuple[ExtremalReport, list[ScanRecord]]:
    graphs, failures = parse_corpus(lines)
    report, records = scan_graphs(graphs, k, mode, jobs, tol)
    report.parse_errors = failures
    return report, records


# -- verification suites -------------------------------------------------------------

def _proper_subsets(g: Graph):
    if g.n > SUBSET_SUITE_MAX_N:
        raise ScanError(f"subset-based suites are limited to n <= {SUBSET_SUITE_MAX_N}")
    for mask in range(1, 1 << g.n):
        if mask.bit_count() >= 2:
            yield mask


def _suite_bounds(g: Graph, k: int, mode: str, subgraph: bool) -> tuple[list, dict]:
    reports = check_subgraph_bounds(g, k, mode) if subgraph else check_global_bounds(g, k, mode)
    failures = [r.to_dict() for r in reports if r.failed]
    return failures, {"bounds": [r.to_dict() for r in reports]}


def _suite_single_bound(g: Graph, k: int, mode: str, bound_id: str) -> tuple[list, dict]:
    report = next(r for r in check_global_bounds(g, k, mode) if r.bound_id == bound_id)
    return ([report.to_dict()] if report.failed else []), {"bound": report.to_dict()}


def _suite_heredity(g: Graph, k: int, mode: str) -> tuple[list, dict]:
    from .connectivity import connectivity

    failures = []
    checked = 0
    for mask in _proper_subsets(g):
        h = induced_subgraph(g, mask)
        if connectivity(h, mode).value < k:
            continue
        checked += 1
        cert = certify_minimality(h, k, mode)
        if not cert.valid:
            failures.append({"subset": vertices_of(mask), "edges_not_critical": [list(e) for e in cert.failing_edges()]})
    return failures, {"k_connected_subgraphs": checked}


def _suite_eigen(g: Graph, k: int, mode: str) -> tuple[list, dict]:
    report = theorem_1_1_report(g, k)
    lv = report.levels
    failures = []
    if lv.L_gamma0 & ~lv.L_beta or lv.L_beta & ~lv.L_alpha:
        failures.append({"nesting": lv.to_dict()})
    return failures, {"report": report.to_dict()}


def _suite_decomposition(g: Graph, k: int, mode: str) -> tuple[list, dict]:
    failures = []
    trees = 0
    for mask in _proper_subsets(g):
        h = induced_subgraph(g, mask)
        tree = decompose(h, k)
        trees += 1
        bad_leaves = [
            vertices_of(leaf.vertices)
            for leaf in tree.leaves()
            if leaf.is_k_edge_connected and 2 * leaf.edges > k * (2 * leaf.vertices.bit_count() - k - 1)
        ]
        if not tree.bound_holds or bad_leaves:
            failures.append({"subset": vertices_of(mask), "tree": tree.to_dict(), "bad_leaves": bad_leaves})
    return failures, {"trees": trees}


def run_suite(g: Graph, suite: str, k: int, mode: str) -> tuple[list, dict]:
    """Failures (empty on pass) and details for one suite on one graph."""
    if suite == "bounds-global":
        return _suite_bounds(g, k, mode, subgraph=False)
    if suite == "bounds-subgraph":
        return _suite_bounds(g, k, mode, subgraph=True)
    if suite == "degree-k":
        return _suite_single_bound(g, k, mode, "lick-degree-k")
    if suite == "forest":
        return _suite_single_bound(g, k, mode, "lemma2.2-forest")
    if suite == "heredity":
        return _suite_heredity(g, k, mode)
    if suite == "eigen-report":
        return _suite_eigen(g, k, mode)
    if suite == "decomposition":
        return _suite_decomposition(g, k, mode)
    raise ScanError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")


@dataclass
class VerifyReport:
    suite: str
    k: int
    mode: str
    scanned: int
    checked: int
    passed: int
    failed: int
    failures: list[dict]
    parse_errors: list[ParseFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        out = asdict(self)
        out["parse_errors"] = [asdict(p) for p in self.parse_errors]
        return out


def _verify_job(args):
    text, suite, k, mode = args
    g = decode_graph6(text)
    if not is_minimally_connected(g, k, mode):
        return None
    failures, details = run_suite(g, suite, k, mode)
    return {"graph6": text, "suite": suite, "passed": not failures, "failures": failures, "details": details}


def verify_graphs(graphs: list[Graph], suite: str, k: int, mode: str, jobs: int = 1) -> tuple[VerifyReport, list[dict]]:
    if suite not in SUITES:
        raise ScanError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if mode not in (VERTEX, EDGE):
        raise ScanError(f"mode must be 'vertex' or 'edge', got {mode!r}")
    results = _map(_verify_job, [(encode_graph6(g), suite, k, mode) for g in graphs], jobs)
    per_graph = [r for r in results if r is not None]
    failed = [r for r in per_graph if not r["passed"]]
    report = VerifyReport(
        suite=suite,
        k=k,
        mode=mode,
        scanned=len(graphs),
        checked=len(per_graph),
        passed=len(per_graph) - len(failed),
        failed=len(failed),
        failures=[{"graph6": r["graph6"], "failures": r["failures"]} for r in failed],
    )
    return report, per_graph


def verify_lines(lines: Iterable[str | bytes], suite: str, k: int, mode: str, jobs: int = 1) -> tuple[VerifyReport, list[dict]]:
    graphs, failures = parse_corpus(lines)
    report, per_graph = verify_graphs(graphs, suite, k, mode, jobs)
    report.parse_errors = failures
    return report, per_graph
