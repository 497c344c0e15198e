"""Edge-count bounds and structural checks for minimally k-(edge)-connected graphs.

Every check runs on any input graph and reports what it finds; whether the
graph really is minimally k-(edge)-connected is the caller's business (see
``connectivity.certify_minimality``).

Bound identifiers are stable strings used in serialized reports:

==================  ============================================================
``thm1.0-a``        e(H) <= k(|H| - 1) for every subgraph H
``thm1.0-b``        e(H) <= k(|H| - k) once |H| is past the mode's threshold
``mader-kn``        e(G) <= kn - C(k+1, 2)
``mader-knk``       e(G) <= k(n - k) for n >= 3k - 2
``cai``             e(G) <= floor((n + k)^2 / 8) for n < 3k - 2 (vertex mode)
``lemma2.3``        e(G) <= k(n - k) + C(k, 2) without (k+1)-edge-connected subgraphs
``lick-degree-k``   at least k + 1 vertices of degree k (edge mode)
``lemma2.2-forest`` the graph minus its degree-k vertices is empty or a forest
==================  ============================================================
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from .connectivity import EDGE, VERTEX, find_j_edge_connected_subgraph
from .graph import Graph, components, is_complete_bipartite, vertices_of
from .spectral import PerronResult, spectral_radius

FULL_SWEEP_MAX_N = 20
SAMPLE_SIZE = 10**6
SAMPLE_SEED = 0


@dataclass
class BoundReport:
    """One bound evaluated on one graph.

    ``holds`` is ``lhs <= rhs`` and ``tight`` is ``lhs == rhs``; a bound whose
    hypotheses do not apply is still evaluated but has ``applicable=False``.
    ``extremal`` records, on equality, whether the witness is K_{k,m-k}, and
    ``uniqueness_applies`` whether the theorem forces that in this regime.
    """

    bound_id: str
    applicable: bool
    lhs: int
    rhs: int
    witness: list[int] | None = None
    extremal: bool | None = None
    uniqueness_applies: bool = False
    note: str = ""

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def tight(self) -> bool:
        return self.lhs == self.rhs

    @property
    def failed(self) -> bool:
        if not self.applicable:
            return False
        if not self.holds:
            return True
        return self.tight and self.uniqueness_applies and self.extremal is False

    def to_dict(self) -> dict:
        return {
            "bound_id": self.bound_id,
            "applicable": self.applicable,
            "holds": self.holds,
            "tight": self.tight,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "witness": self.witness,
            "extremal": self.extremal,
            "uniqueness_applies": self.uniqueness_applies,
            "note": self.note,
        }


def _check_mode(mode: str) -> None:
    if mode not in (VERTEX, EDGE):
        raise ValueError(f"mode must be 'vertex' or 'edge', got {mode!r}")


def large_subgraph_threshold(k: int, mode: str) -> int:
    """Order from which e(H) <= k(|H| - k) is claimed for subgraphs H."""
    _check_mode(mode)
    return k * (k + 5) // 2 if mode == EDGE else 5 * k - 4


# -- subgraph bounds -------------------------------------------------------------

def subset_edge_counts(g: Graph) -> np.ndarray:
    """``out[S]`` = number of edges induced by vertex mask ``S``, for all 2^n masks."""
    if g.n > FULL_SWEEP_MAX_N:
        raise ValueError(f"full subset table is limited to n <= {FULL_SWEEP_MAX_N}")
    out = np.zeros(1 << g.n, dtype=np.int32)
    for v in range(g.n):
        low = np.arange(1 << v, dtype=np.uint32)
        below = np.uint32(g.adj[v] & ((1 << v) - 1))
        out[(1 << v):(2 << v)] = out[: 1 << v] + np.bitwise_count(low & below)
    return out


def _sampled_subsets(g: Graph, samples: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    if g.n > 62:
        raise ValueError("subset sampling is limited to n <= 62")
    rng = np.random.default_rng(seed)
    masks = rng.integers(0, 1 << g.n, size=samples, dtype=np.uint64, endpoint=False)
    masks[0] = np.uint64(g.all_mask)
    masks = np.unique(masks)
    counts = np.zeros(masks.shape, dtype=np.int64)
    for v in range(g.n):
        inside = (masks >> np.uint64(v)) & np.uint64(1)
        counts += inside.astype(np.int64) * np.bitwise_count(masks & np.uint64(g.adj[v])).astype(np.int64)
    return masks, counts // 2


def _complete_bipartite_masks(g: Graph, masks: np.ndarray, k: int) -> np.ndarray:
    """Elementwise: does ``masks[i]`` induce a copy of K_{k, |S|-k}?"""
    masks = masks.astype(np.uint64)
    adj = np.array(g.adj, dtype=np.uint64)
    low = masks & (~masks + np.uint64(1))
    v0 = np.bitwise_count(low - np.uint64(1)).astype(np.int64)
    side_b = masks & adj[v0]
    side_a = masks & ~side_b
    ok = side_b != 0
    na = np.bitwise_count(side_a)
    nb = np.bitwise_count(side_b)
    ok &= (na == k) | (nb == k)
    for v in range(g.n):
        bit = np.uint64(v)
        nbr = adj[v] & masks
        in_a = ((side_a >> bit) & np.uint64(1)).astype(bool)
        in_b = ((side_b >> bit) & np.uint64(1)).astype(bool)
        ok &= ~in_a | (nbr == side_b)
        ok &= ~in_b | (nbr == side_a)
    return ok


def check_subgraph_bounds(g: Graph, k: int, mode: str, samples: int = SAMPLE_SIZE, seed: int = SAMPLE_SEED) -> list[BoundReport]:
    """Worst case of both subgraph bounds over induced subgraphs on >= 2 vertices.

    Induced subgraphs suffice since they carry the most edges on a given vertex
    set. Graphs with n <= 20 are swept exhaustively; larger ones are sampled.
    """
    _check_mode(mode)
    if g.n <= FULL_SWEEP_MAX_N:
        masks = np.arange(1 << g.n, dtype=np.uint64)
        counts = subset_edge_counts(g).astype(np.int64)
        note = "exhaustive"
    else:
        masks, counts = _sampled_subsets(g, samples, seed)
        note = f"sampled {masks.size} subsets, seed {seed}"
    sizes = np.bitwise_count(masks).astype(np.int64)
    reports = []

    eligible = sizes >= 2
    slack = np.where(eligible, counts - k * (sizes - 1), np.iinfo(np.int64).min)
    if eligible.any():
        i = int(np.argmax(slack))
        reports.append(BoundReport("thm1.0-a", True, int(counts[i]), int(k * (sizes[i] - 1)), vertices_of(int(masks[i])), note=note))
    else:
        reports.append(BoundReport("thm1.0-a", False, 0, 0, None, note="no subgraph on >= 2 vertices"))

    threshold = large_subgraph_threshold(k, mode)
    # equality is only claimed to force K_{k,|H|-k} from the edge-mode threshold on;
    # in vertex mode the band [5k-4, k(k+5)/2) is recorded but not judged
    unique_from = large_subgraph_threshold(k, EDGE)
    eligible = sizes >= max(threshold, 2)
    if eligible.any():
        slack = np.where(eligible, counts - k * (sizes - k), np.iinfo(np.int64).min)
        i = int(np.argmax(slack))
        lhs, rhs = int(counts[i]), int(k * (sizes[i] - k))
        extremal = None
        judged = False
        if lhs == rhs:
            tight = slack == 0
            is_k = _complete_bipartite_masks(g, masks[tight], k)
            in_band = sizes[tight] < unique_from
            judged = bool((~in_band).any())
            extremal = bool(is_k[~in_band].all()) if judged else bool(is_k.all())
            odd = int((~is_k & in_band).sum())
            if odd:
                note += f"; {odd} tight non-K_(k,|H|-k) subgraphs with |H| < {unique_from}, not judged"
        if mode == VERTEX and k == 1:
            note += "; k = 1: minimally 1-connected graphs are trees"
        reports.append(
            BoundReport("thm1.0-b", True, lhs, rhs, vertices_of(int(masks[i])), extremal, judged, note=f"{note}; |H| >= {threshold}")
        )
    else:
        reports.append(BoundReport("thm1.0-b", False, 0, 0, None, note=f"no subgraph with |H| >= {threshold}"))
    return reports


# -- global bounds -------------------------------------------------------------------

def degree_k_census(g: Graph, k: int) -> int:
    return sum(1 for d in g.degrees() if d == k)


def _find_cycle(g: Graph, mask: int) -> list[int] | None:
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    for root in vertices_of(mask):
        if root in parent:
            continue
        parent[root] = -1
        depth[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in vertices_of(g.adj[u] & mask):
                if w == parent[u]:
                    continue
                if w in parent:
                    # close the cycle through the lowest common ancestor
                    a, b = u, w
                    left, right = [a], [b]
                    while a != b:
                        if depth[a] >= depth[b]:
                            a = parent[a]
                            left.append(a)
                        else:
                            b = parent[b]
                            right.append(b)
                    return left[:-1] + right[::-1]
                parent[w] = u
                depth[w] = depth[u] + 1
                stack.append(w)
    return None


def forest_check(g: Graph, k: int) -> tuple[bool, list[int] | None]:
    """Whether G minus its degree-k vertices is empty or a forest; else a cycle in it."""
    rest = g.all_mask & ~sum(1 << v for v, d in enumerate(g.degrees()) if d == k)
    cyc = _find_cycle(g, rest)
    return cyc is None, cyc


def check_global_bounds(g: Graph, k: int, mode: str) -> list[BoundReport]:
    _check_mode(mode)
    n, e = g.n, g.num_edges
    reports = [BoundReport("mader-kn", True, e, k * n - comb(k + 1, 2))]

    knk = k * (n - k)
    extremal = is_complete_bipartite(g, k) if e == knk else None
    unique_from = 3 * k - 1 if mode == VERTEX else 3 * k
    reports.append(
        BoundReport(
            "mader-knk", n >= 3 * k - 2, e, knk, None, extremal,
            uniqueness_applies=(n >= unique_from and (mode == EDGE or k >= 2)),
            note=f"applies for n >= {3 * k - 2}; equality forces K_(k,n-k) for n >= {unique_from}",
        )
    )
    reports.append(
        BoundReport("cai", mode == VERTEX and n < 3 * k - 2, e, (n + k) ** 2 // 8, note="vertex mode, n < 3k - 2")
    )

    strong = find_j_edge_connected_subgraph(g, k + 1)
    reports.append(
        BoundReport(
            "lemma2.3", n >= k and strong is None, e, knk + comb(k, 2),
            None if strong is None else vertices_of(strong),
            note="hypothesis: no (k+1)-edge-connected subgraph" if strong is None else "hypothesis fails; witness is a (k+1)-edge-connected subgraph",
        )
    )

    census = degree_k_census(g, k)
    reports.append(
        BoundReport(
            "lick-degree-k", mode == EDGE, k + 1, census,
            [v for v, d in enumerate(g.degrees()) if d == k], note="edge mode",
        )
    )

    rest = g.all_mask & ~sum(1 << v for v, d in enumerate(g.degrees()) if d == k)
    ok, cyc = forest_check(g, k)
    rest_edges = g.edges_within(rest)
    rest_bound = rest.bit_count() - len(components(g, rest)) if rest else 0
    reports.append(
        BoundReport("lemma2.2-forest", mode == VERTEX, rest_edges, rest_bound, cyc, note="vertex mode")
    )
    return reports


# -- Perron level sets -----------------------------------------------------------------

def level_constants(k: int) -> tuple[Fraction, Fraction, Fraction]:
    """(alpha, beta, gamma0) = (1/(24k(k+1)), 5 alpha / 3, 1/(2k))."""
    alpha = Fraction(1, 24 * k * (k + 1))
    return alpha, alpha * Fraction(5, 3), Fraction(1, 2 * k)


@dataclass
class LevelSets:
    alpha: float
    beta: float
    gamma0: float
    ustar: int
    L_alpha: int
    L_beta: int
    L_gamma0: int

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "gamma0": self.gamma0,
            "ustar": self.ustar,
            "L_alpha": vertices_of(self.L_alpha),
            "L_beta": vertices_of(self.L_beta),
            "L_gamma0": vertices_of(self.L_gamma0),
        }


def _above(x: np.ndarray, level: float, strict: bool) -> int:
    hits = np.flatnonzero(x > level) if strict else np.flatnonzero(x >= level)
    return sum(1 << int(v) for v in hits)


def level_sets(g: Graph, perron: PerronResult, k: int) -> LevelSets:
    """Vertices whose Perron coordinate clears alpha, beta (strictly) and gamma0 (weakly)."""
    if k < 2:
        raise ValueError("level sets need k >= 2")
    alpha, beta, gamma0 = (float(c) for c in level_constants(k))
    x = np.asarray(perron.vector, dtype=float)
    ustar = int(np.argmax(x))
    top = x[ustar]
    return LevelSets(
        alpha, beta, gamma0, ustar,
        _above(x, alpha * top, True),
        _above(x, beta * top, True),
        _above(x, gamma0 * top, False),
    )


@dataclass
class Thm11Report:
    """Hypotheses and conclusions of the high-coordinate k-set statement, computed on one graph.

    Nothing here asserts that the hypotheses imply the conclusions; the order
    hypothesis is far out of reach for graphs that fit in memory. ``level_claims``
    holds the intermediate level-set claims, also report-only.
    """

    k: int
    n: int
    rho: float
    hyp_n_ok: bool
    hyp_rho_ok: bool
    L: list[int]
    size_L: int
    coord_ok: bool
    degree_ok: bool
    levels: LevelSets
    level_claims: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "rho": self.rho,
            "hyp_n_ok": self.hyp_n_ok,
            "hyp_rho_ok": self.hyp_rho_ok,
            "L": self.L,
            "size_L": self.size_L,
            "coord_ok": self.coord_ok,
            "degree_ok": self.degree_ok,
            "levels": self.levels.to_dict(),
            "level_claims": self.level_claims,
        }


def order_hypothesis(k: int) -> int:
    """Smallest n with n >= 18k / alpha^2."""
    alpha = level_constants(k)[0]
    bound = 18 * k / alpha**2
    return int(bound) if bound.denominator == 1 else int(bound) + 1


def theorem_1_1_report(g: Graph, k: int, perron: PerronResult | None = None) -> Thm11Report:
    """Evaluate the high-coordinate k-set conclusions with L = L_gamma0.

    ``hyp_rho_ok`` compares rho^2 with k(n-k) directly, so on K_{k,n-k} itself
    it can land on either side of equality by rounding.
    """
    if perron is None:
        perron = spectral_radius(g)
    n = g.n
    levels = level_sets(g, perron, k)
    x = np.asarray(perron.vector, dtype=float)
    top = x[levels.ustar]
    L = vertices_of(levels.L_gamma0)
    degrees = g.degrees()
    coord_ok = min(x[v] for v in L) >= (1 - 1 / (2 * k)) * top
    degree_ok = all(3 * k * degrees[v] >= (3 * k - 2) * n for v in L)

    _, _, gamma0 = level_constants(k)
    high = _above(x, float(1 - gamma0) * top, False)
    level_claims = {
        "L_alpha_below_sqrt_4kn": levels.L_alpha.bit_count() ** 2 < 4 * k * n,
        "L_beta_below_12k_over_alpha": levels.L_beta.bit_count() < 12 * k / float(level_constants(k)[0]),
        "L_gamma0_degrees": all(degrees[v] > (gamma0 - Fraction(1, 6 * k)) * n for v in L),
        "L_gamma0_equals_L_one_minus_gamma0": high == levels.L_gamma0,
    }
    return Thm11Report(
        k=k,
        n=n,
        rho=perron.rho,
        hyp_n_ok=n >= order_hypothesis(k),
        hyp_rho_ok=perron.rho**2 >= k * (n - k),
        L=L,
        size_L=len(L),
        coord_ok=bool(coord_ok),
        degree_ok=bool(degree_ok),
        levels=levels,
        level_claims=level_claims,
    )
