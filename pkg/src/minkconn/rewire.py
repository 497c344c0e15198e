"""Peel-and-rewire transformation onto a high-coordinate k-set.

Given a k-set ``L`` (by default the k largest Perron coordinates), every
vertex outside ``L`` that misses some vertex of ``L`` is peeled off in
minimum-degree order; each one drops its edges to the rest of the current
graph and is joined to all of ``L``. The change in the edge sum
``sum_{uv in E} x_u x_v`` under the old Perron vector bounds the change in
spectral radius from below, which is what ``certify_rayleigh_increase``
reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import Graph, GraphError, mask_of, vertices_of
from .spectral import PerronResult, edge_product_sum, largest_eigenvalue, spectral_radius


@dataclass(frozen=True)
class PeelStep:
    vertex: int
    d: int  # neighbours in L at removal time
    d_prime: int  # neighbours in the current graph outside L
    k: int

    @property
    def bound_ok(self) -> bool:
        return self.d + self.d_prime <= 2 * self.k

    def to_dict(self) -> dict:
        return {"vertex": self.vertex, "d": self.d, "d_prime": self.d_prime, "bound_ok": self.bound_ok}


@dataclass
class RewirePlan:
    source: Graph
    L: int
    V_common: int
    U: int
    steps: list[PeelStep]
    result: Graph

    def to_dict(self, with_rho: bool = True) -> dict:
        out = {
            "L": vertices_of(self.L),
            "V": vertices_of(self.V_common),
            "U": vertices_of(self.U),
            "steps": [s.to_dict() for s in self.steps],
        }
        if with_rho:
            out["rho_before"] = largest_eigenvalue(self.source)
            out["rho_after"] = largest_eigenvalue(self.result)
        if self.result.n <= 62:
            out["result"] = self.result.graph6()
        return out


def _check_L(g: Graph, L: int) -> None:
    if not L:
        raise GraphError("L must be nonempty")
    if L & ~g.all_mask:
        raise GraphError("L has vertices outside the graph")


def partition_LVU(g: Graph, L: int) -> tuple[int, int]:
    """Common neighbourhood of ``L`` (outside ``L``) and the remaining vertices."""
    _check_L(g, L)
    common = 0
    for v in vertices_of(g.all_mask & ~L):
        if g.adj[v] & L == L:
            common |= 1 << v
    return common, g.all_mask & ~L & ~common


def peel_order(g: Graph, L: int, k: int) -> list[PeelStep]:
    """Remove U one vertex at a time, always taking the lowest current degree.

    Ties go to the lowest index. ``bound_ok`` on each step records whether the
    degree at removal was at most 2k; violations are kept, not raised.
    """
    _, rest = partition_LVU(g, L)
    current = g.all_mask
    steps = []
    while rest:
        u = min(vertices_of(rest), key=lambda v: ((g.adj[v] & current).bit_count(), v))
        nb = g.adj[u] & current
        steps.append(PeelStep(u, (nb & L).bit_count(), (nb & ~L).bit_count(), k))
        current &= ~(1 << u)
        rest &= ~(1 << u)
    return steps


def top_coordinate_set(perron: PerronResult, k: int) -> int:
    """Mask of the k largest Perron coordinates, lower index first on ties."""
    x = np.asarray(perron.vector, dtype=float)
    order = sorted(range(len(x)), key=lambda v: (-x[v], v))
    return mask_of(order[:k])


def rewire_to_L(g: Graph, L: int | None, k: int) -> RewirePlan:
    """Peel U in order; each peeled vertex loses its edges outside L and gains all of L.

    ``L=None`` picks the k largest Perron coordinates.
    """
    if L is None:
        L = top_coordinate_set(spectral_radius(g), k)
    _check_L(g, L)
    if L.bit_count() != k:
        raise GraphError(f"|L| must equal k={k}, got {L.bit_count()}")
    common, rest = partition_LVU(g, L)
    steps = peel_order(g, L, k)
    adj = list(g.adj)
    current = g.all_mask
    for step in steps:
        u = step.vertex
        for w in vertices_of(adj[u] & current & ~L):
            adj[w] &= ~(1 << u)
        adj[u] = L
        for w in vertices_of(L):
            adj[w] |= 1 << u
        current &= ~(1 << u)
    return RewirePlan(g, L, common, rest, steps, Graph(g.n, tuple(adj)))


@dataclass
class RayleighReport:
    """Edge-sum change under a fixed vector and the directly recomputed radii.

    ``delta`` is the new edge sum minus the old one. With ``x`` the Perron
    vector of the old graph, ``delta > 0`` forces the radius up.
    """

    delta: float
    rho_old: float
    rho_new: float
    step_terms: list[float] = field(default_factory=list)
    step_lower_bounds: list[float] = field(default_factory=list)
    preconditions: bool | None = None

    @property
    def rho_increased(self) -> bool:
        return self.rho_new > self.rho_old

    @property
    def consistent(self) -> bool:
        """A positive delta must come with a strict increase in radius."""
        return self.delta <= 0 or self.rho_increased

    def to_dict(self) -> dict:
        return {
            "delta": self.delta,
            "rho_old": self.rho_old,
            "rho_new": self.rho_new,
            "rho_increased": self.rho_increased,
            "consistent": self.consistent,
            "preconditions": self.preconditions,
            "step_terms": self.step_terms,
            "step_lower_bounds": self.step_lower_bounds,
        }


def coordinate_preconditions(x, L: int, k: int, steps: list[PeelStep]) -> bool:
    """High coordinates on L, low ones elsewhere, and every peel step within bounds."""
    x = np.asarray(x, dtype=float)
    top = float(x.max())
    inside = vertices_of(L)
    outside = [v for v in range(len(x)) if not L >> v & 1]
    return (
        all(x[v] >= (1 - 1 / (2 * k)) * top for v in inside)
        and all(x[v] < top / (2 * k) for v in outside)
        and all(s.bound_ok and s.d <= k - 1 for s in steps)
    )


def certify_rayleigh_increase(g_old: Graph, g_new: Graph, x, plan: RewirePlan | None = None) -> RayleighReport:
    if g_old.n != g_new.n:
        raise GraphError(f"vertex sets differ: {g_old.n} vs {g_new.n}")
    x = np.asarray(x, dtype=float)
    if x.shape != (g_old.n,):
        raise ValueError(f"vector has shape {x.shape}, expected ({g_old.n},)")
    delta = edge_product_sum(g_new, x) - edge_product_sum(g_old, x)
    report = RayleighReport(delta, largest_eigenvalue(g_old), largest_eigenvalue(g_new))
    if plan is not None:
        L = plan.L
        k = L.bit_count()
        top = float(x.max())
        current = g_old.all_mask
        for step in plan.steps:
            u = step.vertex
            added = vertices_of(L & ~g_old.adj[u])
            removed = vertices_of(g_old.adj[u] & current & ~L)
            report.step_terms.append(float(x[u] * (x[added].sum() - x[removed].sum())))
            # valid only under the coordinate preconditions
            bound = (k - step.d) * (1 - 1 / (2 * k)) - step.d_prime / (2 * k)
            report.step_lower_bounds.append(float(x[u] * top * bound))
            current &= ~(1 << u)
        report.preconditions = coordinate_preconditions(x, L, k, plan.steps)
    return report
