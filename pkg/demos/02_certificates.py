"""
Connectivity with receipts
==========================

Every connectivity value comes with a cut that achieves it, and a minimality
certificate lists, for each edge, a cut of size < k in G - e.
"""

from minkconn import (
    brute_force_connectivity,
    build_graph,
    certify_minimality,
    complete,
    complete_bipartite,
    edge_connectivity,
    vertex_connectivity,
)

# Petersen graph: outer 5-cycle, spokes, inner pentagram
petersen = build_graph(
    10,
    [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)],
)
rep = vertex_connectivity(petersen)
print("Petersen kappa", rep.value, "separator", rep.witness)
print("  brute force agrees:", brute_force_connectivity(petersen, "vertex").value == rep.value)
print("Petersen kappa'", edge_connectivity(petersen).value)

# K_{2,5}: the 2-side separates, and every edge is critical
k25 = complete_bipartite(2, 7)
cert = certify_minimality(k25, 2, "vertex")
print("K_(2,5) minimally 2-connected:", cert.valid)
for edge, cut in list(cert.per_edge.items())[:3]:
    print("  remove", edge, "-> separator", cut.witness)

# K_5 is 4-connected and minimally so; asking for k = 3 fails on every edge
print("K_5 k=4:", certify_minimality(complete(5), 4, "vertex").valid)
print("K_5 k=3 non-critical edges:", len(certify_minimality(complete(5), 3, "vertex").failing_edges()))
