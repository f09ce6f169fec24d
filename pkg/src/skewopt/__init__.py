"""Optimum skew energy orientations of regular graphs."""

from .canon import are_isomorphic, canonical_form
from .constructions import block_identities, g12_family, g26_family, p2_lift, paper_matrix
from .graph import (
    CliqueLevel,
    UndirectedGraph,
    build_graph,
    cartesian_product,
    classify_clique_level,
    disjoint_union,
    even_neighborhood_check,
    is_connected,
    is_regular,
    u_graph,
)
from .oriented import (
    GramReport,
    Orientation,
    gram,
    normalize_switching,
    reverse_at,
    skew_energy,
    skew_matrix,
    two_walk_balance,
)
from .search import (
    CatalogEntry,
    Outcome,
    SearchCertificate,
    build_catalog,
    enumerate_even_neighborhood,
    find_optimum_orientation,
)

__version__ = "0.1.0"
