"""
Which minimally k-connected graph has the largest spectral radius?
==================================================================

Enumerate every graph on n vertices, keep the minimally k-(edge)-connected
ones and look at the maximum of rho. For k = 2 the answer is K_{2,n-2}.
For k = 3 and small n it is not K_{3,n-3}: a wheel wins.
"""

import math

from minkconn import canonical_code, complete_bipartite, enumerate_graphs, scan_graphs

for n in (5, 6, 7):
    graphs = list(enumerate_graphs(n, min_degree=2))  # min degree >= k is necessary
    for mode in ("vertex", "edge"):
        report, _ = scan_graphs(graphs, 2, mode)
        best = report.argmax_rho
        print(f"k=2 n={n} {mode:6s} population={report.population:2d} "
              f"argmax={best['graph6']:6s} rho={best['rho']:.6f} K_(2,n-2)? {report.matches_Kknk}")

# n = 5 in edge mode: the bowtie (two triangles sharing a vertex) is minimally
# 2-edge-connected and has rho = (1 + sqrt 17) / 2 > sqrt 6
print("bowtie", (1 + math.sqrt(17)) / 2, "K_(2,3)", math.sqrt(6))

# k = 3
for n in (6, 7):
    report, records = scan_graphs(list(enumerate_graphs(n, 3)), 3, "vertex")
    kknk = canonical_code(complete_bipartite(3, n))
    rho_k = next(r.rho for r in records if r.graph6 == kknk)
    print(f"k=3 n={n} argmax={report.argmax_rho['graph6']} rho={report.argmax_rho['rho']:.6f} "
          f"(1+sqrt n = {1 + math.sqrt(n):.6f}); K_(3,n-3) has {rho_k:.6f}")

# the wheel's rho = 1 + sqrt(n) drops below sqrt(3(n-3)) from n = 8 on
for n in range(6, 12):
    print(n, round(1 + math.sqrt(n), 4), round(math.sqrt(3 * (n - 3)), 4))
