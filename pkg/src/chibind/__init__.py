"""chibind: constructive coloring for (P2+P3, co-P2+P3)-free graphs.

The library provides:

* immutable bitset-backed graphs with graph6 and edge-list codecs,
* exact oracles (clique, stability, chromatic, clique cover, matching),
* a catalog of named small patterns with induced-subgraph detection,
* the 4-cycle-anchored vertex partition and its rule suite R1..R15,
* a certificate-driven coloring engine meeting the bound
  ``max(w + 3, floor(3w/2) - 1)`` on class members with clique number w,
* generators for the extremal graphs that make the bound tight, and
* a seeded sampler / fuzz harness plus a command-line interface.
"""

from .graphs import (
    FormatError,
    Graph,
    GraphError,
    complement,
    decode_graph6,
    encode_graph6,
    from_edge_list,
    induced,
    to_edge_list,
)
from .oracles import (
    ChromaticTimeout,
    ExactStats,
    PreconditionError,
    chi_alpha2,
    chromatic_number,
    clique_number,
    exact_stats,
    max_clique,
    max_matching,
    stability_number,
    theta,
)
from .patterns import (
    CATALOG,
    PATTERN_NAMES,
    find_induced,
    in_class,
    is_free,
    pattern_graph,
)
from .partition import (
    C4Partition,
    PropertyReport,
    ThreeNeighborsError,
    all_c4_partitions,
    build_partition,
    check_properties,
)
from .engine import (
    BoundViolation,
    CaseColoringError,
    ColoringDerivation,
    Comparable,
    DirectColoring,
    NicePartition,
    NiceVertex,
    NotInClassError,
    Universal,
    bound,
    color,
    color_c4_case,
    color_cobipartite,
    color_complete_multipartite,
    color_k23_case,
    color_via_complement,
    find_certificate,
    validate_certificate,
)
from .extremal import (
    clebsch_complement,
    g_k,
    grotzsch,
    join_kt,
    mycielskian,
    named_graph,
    schlafli,
    tightness_report,
)
from .sampling import (
    FuzzReport,
    SamplerConfig,
    SamplingFailure,
    fuzz_bound,
    sample_free,
    sample_in_class,
)

__all__ = [
    "BoundViolation",
    "C4Partition",
    "CATALOG",
    "CaseColoringError",
    "ChromaticTimeout",
    "ColoringDerivation",
    "Comparable",
    "DirectColoring",
    "ExactStats",
    "FormatError",
    "FuzzReport",
    "Graph",
    "GraphError",
    "NicePartition",
    "NiceVertex",
    "NotInClassError",
    "PATTERN_NAMES",
    "PreconditionError",
    "PropertyReport",
    "SamplerConfig",
    "SamplingFailure",
    "ThreeNeighborsError",
    "Universal",
    "all_c4_partitions",
    "bound",
    "build_partition",
    "check_properties",
    "chi_alpha2",
    "chromatic_number",
    "clebsch_complement",
    "clique_number",
    "color",
    "color_c4_case",
    "color_cobipartite",
    "color_complete_multipartite",
    "color_k23_case",
    "color_via_complement",
    "complement",
    "decode_graph6",
    "encode_graph6",
    "exact_stats",
    "find_certificate",
    "find_induced",
    "from_edge_list",
    "fuzz_bound",
    "g_k",
    "grotzsch",
    "in_class",
    "induced",
    "is_free",
    "join_kt",
    "max_clique",
    "max_matching",
    "mycielskian",
    "named_graph",
    "pattern_graph",
    "sample_free",
    "sample_in_class",
    "schlafli",
    "stability_number",
    "tightness_report",
    "theta",
    "to_edge_list",
    "validate_certificate",
]

__version__ = "0.1.0"
