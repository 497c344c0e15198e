"""
Perron coordinates of K_{3,n-3}
===============================

On K_{k,n-k} the small side has coordinate 1 and the big side k / rho.
Once that ratio drops under 1/(2k) the top level set is exactly the k-side,
which is the structure the high-coordinate statement predicts.
"""

import numpy as np

from minkconn import complete_bipartite, spectral_radius, theorem_1_1_report
from minkconn.structure import level_constants, order_hypothesis

k = 3
alpha, beta, gamma0 = level_constants(k)
print("alpha", alpha, "beta", beta, "gamma0", gamma0, "order hypothesis n >=", order_hypothesis(k))

for n in (12, 50, 100, 111, 112, 200, 500):
    g = complete_bipartite(k, n)
    perron = spectral_radius(g)
    rep = theorem_1_1_report(g, k, perron)
    print(f"n={n:3d} rho={perron.rho:8.4f} ratio={perron.vector[-1]:.4f} |L|={rep.size_L:3d} "
          f"coord_ok={rep.coord_ok} degree_ok={rep.degree_ok}")

# the switch happens where 3 / sqrt(3(n-3)) = 1/6, i.e. n - 3 = 4k^3 = 108
print("crossover n =", 4 * k**3 + k)

# a perturbed graph: extra chords inside the big side lift some coordinates
g = complete_bipartite(k, 200).with_edges([(10, 11), (11, 12), (12, 10)])
rep = theorem_1_1_report(g, k)
print("perturbed |L| =", rep.size_L, "levels:", {key: len(v) if isinstance(v, list) else v for key, v in rep.levels.to_dict().items()})
print("level-set claims (reported, not asserted):", rep.level_claims)
print("top coordinates:", np.round(np.sort(spectral_radius(g).vector)[-6:], 4))
