"""Minimally k-(edge)-connected graphs: connectivity certificates, Perron
vectors, structural bound checks, the peel-and-rewire transformation and
exhaustive extremal scans."""

from .connectivity import (
    EDGE,
    VERTEX,
    ConnectivityReport,
    DecompositionTree,
    MinimalityCertificate,
    brute_force_connectivity,
    certify_minimality,
    connectivity,
    decompose,
    edge_connectivity,
    find_j_edge_connected_subgraph,
    is_minimally_connected,
    local_edge_connectivity,
    local_vertex_connectivity,
    vertex_connectivity,
)
from .graph import (
    Graph,
    Graph6Error,
    GraphError,
    build_graph,
    canonical_code,
    complete,
    complete_bipartite,
    cycle,
    decode_graph6,
    encode_graph6,
    enumerate_graphs,
    induced_subgraph,
    k_appended,
    make_family,
    path,
    star,
)
from .rewire import RayleighReport, RewirePlan, certify_rayleigh_increase, peel_order, rewire_to_L
from .scan import ExtremalReport, ScanRecord, VerifyReport, run_suite, scan_graphs, verify_graphs
from .spectral import PerronResult, dense_spectrum, jacobi_eigenvalues, rayleigh_quotient, spectral_radius
from .structure import (
    BoundReport,
    check_global_bounds,
    check_subgraph_bounds,
    degree_k_census,
    level_sets,
    theorem_1_1_report,
)

__version__ = "0.1.0"
