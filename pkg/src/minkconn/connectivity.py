"""Vertex and edge connectivity by unit-capacity max-flow, with witness cuts.

Also holds the exhaustive oracles, minimality certificates, and the recursive
min-cut decomposition used to bound edge counts of subgraphs.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Union

from .graph import Graph, GraphError, induced_subgraph, is_connected, vertices_of

VERTEX = "vertex"
EDGE = "edge"
KINDS = (VERTEX, EDGE)

BRUTE_VERTEX_MAX_N = 12
BRUTE_EDGE_MAX_E = 24
BRUTE_EDGE_MAX_CUT = 8


@dataclass(frozen=True)
class ConnectivityReport:
    """Connectivity value plus a cut certifying it.

    For ``kind == "vertex"`` the witness is a sorted tuple of vertices; for
    ``kind == "edge"`` it is a sorted tuple of ``(u, v)`` pairs. ``side`` is the
    source side of an edge cut as a vertex mask (None for vertex cuts).
    """

    kind: str
    value: int
    witness: tuple
    side: int | None = None

    def to_dict(self) -> dict:
        return {"kind": self.kind, "value": self.value, "witness": [list(w) if isinstance(w, tuple) else w for w in self.witness]}


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"kind must be 'vertex' or 'edge', got {kind!r}")


# -- max-flow -------------------------------------------------------------------

def _max_flow(cap: list[dict[int, int]], s: int, t: int, limit: int | None = None) -> tuple[int, set[int]]:
    """Augment along BFS shortest paths; ``cap`` becomes the residual network.

    Stops once the flow reaches ``limit``. Returns the flow value and the set
    of nodes reachable from ``s`` in the final residual network (only a min
    cut if the flow was not stopped early).
    """
    flow = 0
    while limit is None or flow < limit:
        parent = {s: s}
        queue = deque([s])
        while queue and t not in parent:
            u = queue.popleft()
            for v, c in cap[u].items():
                if c > 0 and v not in parent:
                    parent[v] = u
                    queue.append(v)
        if t not in parent:
            return flow, set(parent)
        v = t
        bottleneck = None
        while v != s:
            u = parent[v]
            bottleneck = cap[u][v] if bottleneck is None else min(bottleneck, cap[u][v])
            v = u
        v = t
        while v != s:
            u = parent[v]
            cap[u][v] -= bottleneck
            cap[v][u] += bottleneck
            v = u
        flow += bottleneck
    return flow, set()


def _edge_network(g: Graph) -> list[dict[int, int]]:
    cap: list[dict[int, int]] = [dict() for _ in range(g.n)]
    for u, v in g.edges():
        cap[u][v] = 1
        cap[v][u] = 1
    return cap


def _split_network(g: Graph, s: int, t: int) -> list[dict[int, int]]:
    # v_in = 2v, v_out = 2v + 1
    big = g.n
    cap: list[dict[int, int]] = [dict() for _ in range(2 * g.n)]
    for v in range(g.n):
        c = big if v in (s, t) else 1
        cap[2 * v][2 * v + 1] = c
        cap[2 * v + 1].setdefault(2 * v, 0)
    for u, v in g.edges():
        cap[2 * u + 1][2 * v] = big
        cap[2 * v].setdefault(2 * u + 1, 0)
        cap[2 * v + 1][2 * u] = big
        cap[2 * u].setdefault(2 * v + 1, 0)
    return cap


def local_edge_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> ConnectivityReport:
    """Maximum number of edge-disjoint s-t paths, with a min cut when below ``limit``."""
    value, reach = _max_flow(_edge_network(g), s, t, limit)
    if limit is not None and value >= limit:
        return ConnectivityReport(EDGE, value, ())
    side = 0
    for v in reach:
        side |= 1 << v
    cut = tuple((min(u, v), max(u, v)) for u in vertices_of(side) for v in vertices_of(g.adj[u] & ~side))
    return ConnectivityReport(EDGE, value, tuple(sorted(cut)), side)


def local_vertex_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> ConnectivityReport:
    """Maximum number of internally disjoint s-t paths for non-adjacent ``s``, ``t``."""
    if g.has_edge(s, t):
        raise GraphError(f"local vertex connectivity needs non-adjacent vertices, {s} and {t} are adjacent")
    cap = _split_network(g, s, t)
    value, reach = _max_flow(cap, 2 * s + 1, 2 * t, limit)
    if limit is not None and value >= limit:
        return ConnectivityReport(VERTEX, value, ())
    sep = tuple(v for v in range(g.n) if 2 * v in reach and 2 * v + 1 not in reach)
    return ConnectivityReport(VERTEX, value, sep)


def edge_connectivity(g: Graph) -> ConnectivityReport:
    """kappa'(G) with a minimum edge cut; source fixed at vertex 0, sinks ascending."""
    if g.n == 1:
        return ConnectivityReport(EDGE, 0, (), 1)
    best = None
    for t in range(1, g.n):
        rep = local_edge_connectivity(g, 0, t, None if best is None else best.value)
        if best is None or rep.value < best.value:
            best = rep
            if best.value == 0:
                break
    return best


def vertex_connectivity(g: Graph) -> ConnectivityReport:
    """kappa(G) with a minimum separator; K_n reports n-1 and vertices ``0..n-2``."""
    if g.n < 2:
        raise GraphError("vertex connectivity is undefined for n < 2")
    best = ConnectivityReport(VERTEX, g.n - 1, tuple(range(g.n - 1)))
    for s, t in itertools.combinations(range(g.n), 2):
        if g.has_edge(s, t):
            continue
        rep = local_vertex_connectivity(g, s, t, best.value)
        if rep.value < best.value:
            best = rep
            if best.value == 0:
                break
    return best


def connectivity(g: Graph, kind: str) -> ConnectivityReport:
    _check_kind(kind)
    return vertex_connectivity(g) if kind == VERTEX else edge_connectivity(g)


# -- brute-force oracle -------------------------------------------------------------

def brute_force_connectivity(g: Graph, kind: str) -> ConnectivityReport:
    """Smallest removal set that disconnects ``g``, found by exhaustive search."""
    _check_kind(kind)
    if kind == VERTEX:
        if g.n < 2:
            raise GraphError("vertex connectivity is undefined for n < 2")
        if g.n > BRUTE_VERTEX_MAX_N:
            raise GraphError(f"vertex oracle is capped at n <= {BRUTE_VERTEX_MAX_N}")
        for size in range(g.n):
            for sub in itertools.combinations(range(g.n), size):
                rest = g.all_mask
                for v in sub:
                    rest &= ~(1 << v)
                if rest.bit_count() <= 1 or not is_connected(g, rest):
                    return ConnectivityReport(VERTEX, size, sub)
        raise AssertionError("unreachable")
    if g.n == 1:
        return ConnectivityReport(EDGE, 0, (), 1)
    edges = g.edges()
    max_size = len(edges)
    if len(edges) > BRUTE_EDGE_MAX_E:
        # kappa' <= min degree, so the capped search is still exhaustive
        max_size = g.min_degree()
        if max_size > BRUTE_EDGE_MAX_CUT:
            raise GraphError(f"edge oracle needs e <= {BRUTE_EDGE_MAX_E} or min degree <= {BRUTE_EDGE_MAX_CUT}")
    for size in range(max_size + 1):
        for sub in itertools.combinations(edges, size):
            if not is_connected(g.without_edges(sub)):
                return ConnectivityReport(EDGE, size, sub)
    raise AssertionError("unreachable")


# -- minimality ---------------------------------------------------------------------

@dataclass
class MinimalityCertificate:
    """Evidence that ``g`` is (or is not) minimally k-(edge)-connected.

    ``per_edge`` maps every edge to a cut of size < k in ``G - e``, or None
    when deleting that edge keeps the graph k-(edge)-connected.
    """

    k: int
    kind: str
    base: ConnectivityReport | None
    per_edge: dict[tuple[int, int], ConnectivityReport | None] = field(default_factory=dict)

    @property
    def base_ok(self) -> bool:
        return self.base is not None and self.base.value >= self.k

    @property
    def valid(self) -> bool:
        return self.base_ok and all(w is not None for w in self.per_edge.values())

    def failing_edges(self) -> list[tuple[int, int]]:
        return [e for e, w in self.per_edge.items() if w is None]

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "kind": self.kind,
            "base_ok": self.base_ok,
            "connectivity": None if self.base is None else self.base.to_dict(),
            "valid": self.valid,
            "per_edge": [
                {"edge": list(e), "witness": None if w is None else w.to_dict()["witness"]}
                for e, w in self.per_edge.items()
            ],
        }


def certify_minimality(g: Graph, k: int, kind: str) -> MinimalityCertificate:
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_kind(kind)
    try:
        base = connectivity(g, kind)
    except GraphError:
        base = None
    cert = MinimalityCertificate(k, kind, base)
    for u, v in g.edges():
        h = g.without_edges([(u, v)])
        if cert.base_ok:
            # g is k-connected, so any sub-k cut of g - uv must separate u from v
            if kind == EDGE:
                rep = local_edge_connectivity(h, u, v, k)
            else:
                rep = local_vertex_connectivity(h, u, v, k)
        else:
            try:
                rep = connectivity(h, kind)
            except GraphError:
                rep = None
        cert.per_edge[(u, v)] = rep if rep is not None and rep.value < k else None
    return cert


def is_minimally_connected(g: Graph, k: int, kind: str) -> bool:
    """Cheap filter: min degree, then the full certificate."""
    if g.n < 2 or g.min_degree() < k:
        return False
    return certify_minimality(g, k, kind).valid


# -- j-edge-connected subgraphs and decomposition -------------------------------------

def _cut_inside(g: Graph, mask: int) -> tuple[int, int]:
    """Edge connectivity of ``G[mask]`` and the source side of a min cut (original labels)."""
    keep = vertices_of(mask)
    rep = edge_connectivity(induced_subgraph(g, mask))
    side = 0
    for i in vertices_of(rep.side):
        side |= 1 << keep[i]
    return rep.value, side


def find_j_edge_connected_subgraph(g: Graph, j: int, mask: int | None = None) -> int | None:
    """Vertex mask inducing a j-edge-connected subgraph on >= 2 vertices, or None."""
    if j < 1:
        raise ValueError("j must be >= 1")
    if mask is None:
        mask = g.all_mask
    if mask.bit_count() < 2:
        return None
    value, side = _cut_inside(g, mask)
    if value >= j:
        return mask
    # a j-edge-connected subgraph cannot straddle a cut with fewer than j edges
    return find_j_edge_connected_subgraph(g, j, side) or find_j_edge_connected_subgraph(g, j, mask & ~side)


@dataclass(frozen=True)
class Leaf:
    vertices: int
    is_k_edge_connected: bool
    edges: int


@dataclass(frozen=True)
class Split:
    vertices: int
    cut_size: int
    left: Union["Leaf", "Split"]
    right: Union["Leaf", "Split"]


@dataclass
class DecompositionTree:
    k: int
    root: Leaf | Split
    num_edges: int

    def leaves(self) -> list[Leaf]:
        out = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            if isinstance(node, Leaf):
                out.append(node)
            else:
                stack.append(node.right)
                stack.append(node.left)
        return out

    def splits(self) -> list[Split]:
        out = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            if isinstance(node, Split):
                out.append(node)
                stack.append(node.right)
                stack.append(node.left)
        return out

    @property
    def num_splits(self) -> int:
        return len(self.splits())

    @property
    def leaf_edge_sum(self) -> int:
        return sum(leaf.edges for leaf in self.leaves())

    @property
    def bound_rhs(self) -> int:
        return self.leaf_edge_sum + (self.k - 1) * self.num_splits

    @property
    def bound_holds(self) -> bool:
        return self.num_edges <= self.bound_rhs

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "edges": self.num_edges,
            "splits": self.num_splits,
            "leaves": [
                {"vertices": vertices_of(leaf.vertices), "edges": leaf.edges, "k_edge_connected": leaf.is_k_edge_connected}
                for leaf in self.leaves()
            ],
            "bound_rhs": self.bound_rhs,
            "bound_holds": self.bound_holds,
        }


def decompose(g: Graph, k: int) -> DecompositionTree:
    """Split along minimum edge cuts until every part is k-edge-connected or a singleton."""
    if k < 1:
        raise ValueError("k must be >= 1")

    def build(mask: int) -> Leaf | Split:
        if mask.bit_count() == 1:
            return Leaf(mask, False, 0)
        value, side = _cut_inside(g, mask)
        if value >= k:
            return Leaf(mask, True, g.edges_within(mask))
        return Split(mask, value, build(side), build(mask & ~side))

    return DecompositionTree(k, build(g.all_mask), g.num_edges)
