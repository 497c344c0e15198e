"""
Peel and rewire
===============

Take the k vertices with the largest Perron coordinates as L. Every other
vertex that misses part of L is peeled off in minimum-degree order, loses its
remaining edges and is joined to all of L. The edge sum under the old Perron
vector goes up, so rho goes up.
"""

from minkconn import build_graph, certify_rayleigh_increase, rewire_to_L, spectral_radius

# K_{2,4} with a pendant vertex 6 on vertex 2
g = build_graph(7, [(u, v) for u in (0, 1) for v in range(2, 6)] + [(2, 6)])
plan = rewire_to_L(g, None, 2)
print(plan.to_dict())

rep = certify_rayleigh_increase(g, plan.result, spectral_radius(g).vector, plan)
print("delta", rep.delta, "= sum of step terms", sum(rep.step_terms))

# at larger order the coordinate preconditions hold and each step is bounded below
k, n = 3, 150
edges = [(u, v) for u in range(k) for v in range(k, n - 2)]
edges += [(0, n - 2), (5, n - 2), (6, n - 2), (n - 2, n - 1), (1, n - 1)]
g = build_graph(n, edges)
perron = spectral_radius(g)
plan = rewire_to_L(g, None, k)
rep = certify_rayleigh_increase(g, plan.result, perron.vector, plan)
print("L", plan.to_dict(with_rho=False)["L"], "U", plan.to_dict(with_rho=False)["U"])
print("preconditions", rep.preconditions, "delta", round(rep.delta, 6))
for term, bound in zip(rep.step_terms, rep.step_lower_bounds):
    print(f"  step term {term:.6f} >= bound {bound:.6f}")
print("rho", rep.rho_old, "->", rep.rho_new)
