"""Power ideals of rooted graphs, their monomizations, and Hilbert series cross-checks."""

from .graph import (
    Edge,
    FunctionalSubgraph,
    GraphFormatError,
    RootedMultigraph,
    activity_polynomial,
    canonical_orientation,
    enumerate_forests,
    enumerate_functional_subgraphs,
    external_activity,
    load_graph,
    mask_of,
    parse_graph,
)
from .ideals import (
    MonomialIdeal,
    PowerIdeal,
    build_power_ideal,
    check_monotone_family,
    minimal_generators,
    monomize,
    nu,
)
from .oracles import (
    alternating_sum_dimension,
    count_compatible_pairs,
    exact_rank,
    hilbert_series_A,
    kappa,
    label_special,
)
from .standard import (
    HilbertSeries,
    hilbert_series_B,
    is_classical_parking,
    is_g_parking,
    orbit_count,
    standard_monomials,
)

__version__ = "0.1.0"
