"""Simple undirected graphs stored as per-vertex bitsets.

Also home to the graph6 codec, the brute-force canonical form used for
small graphs, and isomorph-free enumeration for n <= 7.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_VERTICES = 1024
GRAPH6_MAX_N = 62
MAX_CANONICAL_N = 8
MAX_ENUMERATE_N = 7


class GraphError(ValueError):
    pass


class Graph6Error(ValueError):
    pass


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj[v]`` is an int bitmask of the neighbourhood of ``v``. Instances are
    immutable; edits return new graphs.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside [1, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"neighbour of {v} out of range")
            if nb >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in vertices_of(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees())

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return vertices_of(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in vertices_of(self.adj[u] >> (u + 1) << (u + 1))]

    def edges_within(self, mask: int) -> int:
        """Number of edges with both ends in ``mask``."""
        return sum((self.adj[v] & mask).bit_count() for v in vertices_of(mask)) // 2

    def edges_between(self, a: int, b: int) -> int:
        """Number of edges joining disjoint vertex sets ``a`` and ``b``."""
        return sum((self.adj[v] & b).bit_count() for v in vertices_of(a))

    def without_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in edges:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in edges:
            _check_pair(self.n, u, v)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def graph6(self) -> str:
        return encode_graph6(self)

    def __repr__(self):
        if self.n > GRAPH6_MAX_N:
            return f"Graph(n={self.n}, e={self.num_edges})"
        return f"Graph(n={self.n}, e={self.num_edges}, g6={encode_graph6(self)!r})"


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
    if u == v:
        raise GraphError(f"loop edge ({u}, {v})")


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on ``n`` vertices with the given edges; repeated pairs collapse."""
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside [1, {MAX_VERTICES}]")
    adj = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def is_connected(g: Graph, mask: int | None = None) -> bool:
    """Whether the subgraph induced by ``mask`` (default: all) is connected.

    The empty set counts as disconnected.
    """
    if mask is None:
        mask = g.all_mask
    if not mask:
        return False
    return component_of(g, (mask & -mask).bit_length() - 1, mask) == mask


def component_of(g: Graph, v: int, mask: int | None = None) -> int:
    if mask is None:
        mask = g.all_mask
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        for u in vertices_of(frontier):
            nxt |= g.adj[u]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen


def components(g: Graph, mask: int | None = None) -> list[int]:
    if mask is None:
        mask = g.all_mask
    out = []
    rest = mask
    while rest:
        c = component_of(g, (rest & -rest).bit_length() - 1, mask)
        out.append(c)
        rest &= ~c
    return out


def induced_subgraph(g: Graph, mask: int) -> Graph:
    """Subgraph induced by ``mask``, relabelled to ``0..|S|-1`` in index order."""
    if not mask:
        raise GraphError("induced subgraph of an empty vertex set")
    if mask & ~g.all_mask:
        raise GraphError("vertex set has members outside the graph")
    keep = vertices_of(mask)
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        adj.append(mask_of(pos[u] for u in vertices_of(g.adj[v] & mask)))
    return Graph(len(keep), tuple(adj))


# -- named families ---------------------------------------------------------

def complete_bipartite(k: int, n: int) -> Graph:
    """K_{k,n-k}; vertices ``0..k-1`` form the k-side."""
    if not 1 <= k < n:
        raise GraphError(f"complete_bipartite needs 1 <= k < n, got k={k}, n={n}")
    return build_graph(n, [(u, v) for u in range(k) for v in range(k, n)])


def complete(n: int) -> Graph:
    return build_graph(n, itertools.combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """K_{1,n-1} centred at vertex 0."""
    if n < 2:
        raise GraphError("star needs n >= 2")
    return build_graph(n, [(0, v) for v in range(1, n)])


def k_appended(n: int, k: int) -> Graph:
    """K(n-1, k): K_{n-1} on ``0..n-2`` plus vertex ``n-1`` joined to ``0..k-1``."""
    if n < 2 or not 1 <= k <= n - 1:
        raise GraphError(f"k_appended needs n >= 2 and 1 <= k <= n-1, got n={n}, k={k}")
    edges = list(itertools.combinations(range(n - 1), 2))
    edges += [(v, n - 1) for v in range(k)]
    return build_graph(n, edges)


FAMILIES = {
    "complete_bipartite": complete_bipartite,
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "star": star,
    "k_appended": k_appended,
}


def make_family(family: str, **params) -> Graph:
    """Build a named graph, e.g. ``make_family("complete_bipartite", k=2, n=7)``."""
    name = family.replace("-", "_")
    if name not in FAMILIES:
        raise GraphError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    try:
        return FAMILIES[name](**params)
    except TypeError as exc:
        raise GraphError(f"bad parameters for {family}: {exc}") from None


def complete_bipartite_sides(g: Graph) -> tuple[int, int] | None:
    """Return the two sides (as masks) if ``g`` is complete bipartite, else None.

    The side containing vertex 0 comes first.
    """
    if g.n < 2:
        return None
    a = component_of(g, 0)
    if a != g.all_mask:
        return None
    side = g.all_mask & ~g.adj[0]
    other = g.adj[0]
    for v in vertices_of(side):
        if g.adj[v] != other:
            return None
    for v in vertices_of(other):
        if g.adj[v] != side:
            return None
    return side, other


def is_complete_bipartite(g: Graph, k: int) -> bool:
    """Whether ``g`` is isomorphic to K_{k, n-k}."""
    sides = complete_bipartite_sides(g)
    if sides is None:
        return False
    return k in (sides[0].bit_count(), sides[1].bit_count())


# -- graph6 -------------------------------------------------------------------

def _pair_count(n: int) -> int:
    return n * (n - 1) // 2


def _edge_code(g: Graph) -> int:
    """Upper-triangle bits in graph6 column order, first pair most significant."""
    code = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            code = code << 1 | (col >> i & 1)
    return code


def _code_to_graph6(n: int, code: int) -> str:
    m = _pair_count(n)
    groups = -(-m // 6)
    code <<= groups * 6 - m
    chars = [chr(n + 63)]
    for shift in range((groups - 1) * 6, -1, -6):
        chars.append(chr((code >> shift & 63) + 63))
    return "".join(chars)


def encode_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise Graph6Error(f"short-form graph6 holds at most {GRAPH6_MAX_N} vertices, got {g.n}")
    return _code_to_graph6(g.n, _edge_code(g))


def decode_graph6(data: str | bytes) -> Graph:
    """Decode a short-form graph6 string (no header, no trailing newline)."""
    if isinstance(data, bytes):
        try:
            data = data.decode("ascii")
        except UnicodeDecodeError:
            raise Graph6Error("graph6 data is not ASCII") from None
    if not data:
        raise Graph6Error("empty graph6 string")
    for pos, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} at position {pos} outside [63, 126]")
    n = ord(data[0]) - 63
    if n == 63:
        raise Graph6Error("long-form graph6 (n > 62) is not supported")
    if n < 1:
        raise Graph6Error("graph6 with zero vertices")
    m = _pair_count(n)
    groups = -(-m // 6)
    if len(data) != 1 + groups:
        raise Graph6Error(f"expected {1 + groups} bytes for n={n}, got {len(data)}")
    code = 0
    for ch in data[1:]:
        code = code << 6 | (ord(ch) - 63)
    pad = groups * 6 - m
    if code & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    code >>= pad
    adj = [0] * n
    bit = m - 1
    for j in range(1, n):
        for i in range(j):
            if code >> bit & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit -= 1
    return Graph(n, tuple(adj))


def read_graph6_lines(lines: Iterable[str | bytes]) -> Iterator[tuple[int, Graph | Graph6Error]]:
    """Yield ``(line_number, graph_or_error)`` for each non-blank line.

    A ``>>graph6<<`` header on the first line is skipped.
    """
    for lineno, raw in enumerate(lines, start=1):
        line = raw.decode("ascii", "replace") if isinstance(raw, bytes) else raw
        line = line.strip()
        if not line:
            continue
        if lineno == 1 and line.startswith(">>graph6<<"):
            line = line[len(">>graph6<<"):]
        try:
            yield lineno, decode_graph6(line)
        except Graph6Error as exc:
            yield lineno, exc


# -- canonical form -------------------------------------------------------------

@lru_cache(maxsize=None)
def _permutation_shifts(n: int) -> np.ndarray:
    """``shifts[p, b]`` is the code bit that pair ``b`` maps to under permutation ``p``.

    Stored as ready-to-OR int64 masks.
    """
    m = _pair_count(n)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    index = np.zeros((n, n), dtype=np.int64)
    for b, (i, j) in enumerate(pairs):
        index[i, j] = index[j, i] = b
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    pi = np.array([p[0] for p in pairs], dtype=np.int64)
    pj = np.array([p[1] for p in pairs], dtype=np.int64)
    image = index[perms[:, pi], perms[:, pj]]
    return np.left_shift(np.int64(1), (m - 1) - image)


def _orbit_codes(n: int, code: int) -> np.ndarray:
    shifts = _permutation_shifts(n)
    m = _pair_count(n)
    out = np.zeros(shifts.shape[0], dtype=np.int64)
    for b in range(m):
        if code >> (m - 1 - b) & 1:
            out |= shifts[:, b]
    return out


def canonical_code(g: Graph) -> str:
    """Lexicographically smallest graph6 string over all relabellings (n <= 8)."""
    if g.n > MAX_CANONICAL_N:
        raise GraphError(f"canonical form is only computed for n <= {MAX_CANONICAL_N}")
    if g.n == 1:
        return encode_graph6(g)
    return _code_to_graph6(g.n, int(_orbit_codes(g.n, _edge_code(g)).min()))


def canonical_graph(g: Graph) -> Graph:
    return decode_graph6(canonical_code(g))


# -- enumeration ----------------------------------------------------------------

@lru_cache(maxsize=None)
def _class_codes(n: int) -> tuple[int, ...]:
    """Minimal edge codes of every isomorphism class on ``n`` vertices, ascending.

    Scanning codes in increasing order and marking each newly met orbit means
    the first member seen of any orbit is its minimum.
    """
    if n == 1:
        return (0,)
    m = _pair_count(n)
    seen = np.zeros(1 << m, dtype=bool)
    reps = []
    for code in range(1 << m):
        if seen[code]:
            continue
        reps.append(code)
        seen[_orbit_codes(n, code)] = True
    return tuple(reps)


def enumerate_graphs(n: int, min_degree: int = 0) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` vertices with minimum degree >= ``min_degree``.

    Graphs come out in ascending canonical-code order, each already in
    canonical labelling.
    """
    if not 1 <= n <= MAX_ENUMERATE_N:
        raise GraphError(f"enumeration is capped at n <= {MAX_ENUMERATE_N}; ingest graph6 files instead")
    for code in _class_codes(n):
        g = decode_graph6(_code_to_graph6(n, code))
        if g.min_degree() >= min_degree:
            yield g
