"""Plane-graph analysis toolkit: combinatorial embeddings, forbidden-subgraph
detection, triangular-block decomposition, exact discharging arithmetic, and
extremal search for planar graphs avoiding K4 together with a fixed cycle
length (5 or 6).

The central verified statements are the edge bounds
e <= 15(n-2)/7 (no K4, no 5-cycle) and e <= 7(n-2)/3 (no K4, no 6-cycle)
for planar graphs, together with constructions attaining them.
"""

from .blocks import (
    BlockPartition,
    GrowthMode,
    PeelResult,
    TriangularBlock,
    TwoConnectedCensus,
    classify_block,
    grow_block,
    peel,
    triangular_blocks,
    two_connected_census,
)
from .construct import (
    GENERATOR_VERSION,
    Construction,
    NotRingShaped,
    NotTriangulation,
    SelfCheckError,
    ValidationReport,
    gen_g0,
    gen_h0,
    gen_ring_extension,
    gen_theorem2,
    gen_theorem4,
    gen_triangulation,
)
from .core import (
    AbstractGraph,
    Face,
    GraphFormatError,
    PlaneGraph,
    build_plane_graph,
    genus_check,
    parse_rot,
    plane_graph_from_faces,
    serialize_rot,
    trace_faces,
)
from .detect import (
    FreenessReport,
    contains_k4,
    find_cycle_of_length,
    find_k4,
    has_cycle_of_length,
    is_family_free,
)
from .discharge import (
    BoundResult,
    Lemma1Census,
    VerifyReport,
    audit,
    block_score,
    bound_value,
    edge_contribution,
    lemma1_census,
)
from .embed import EmbedResult, embed, is_planar, parse_edg, serialize_edg
from .families import FAMILIES, K4C5, K4C6, Family, family_from_name
from .search import (
    CapExceeded,
    SearchMode,
    SearchResult,
    canonical_form,
    corpus_emit,
    graph_from_canonical,
    search_max_edges,
)

__version__ = "0.1.0"

__all__ = [
    "AbstractGraph",
    "BlockPartition",
    "BoundResult",
    "CapExceeded",
    "Construction",
    "EmbedResult",
    "FAMILIES",
    "Face",
    "Family",
    "FreenessReport",
    "GENERATOR_VERSION",
    "GraphFormatError",
    "GrowthMode",
    "K4C5",
    "K4C6",
    "Lemma1Census",
    "NotRingShaped",
    "NotTriangulation",
    "PeelResult",
    "PlaneGraph",
    "SearchMode",
    "SearchResult",
    "SelfCheckError",
    "TriangularBlock",
    "TwoConnectedCensus",
    "ValidationReport",
    "VerifyReport",
    "audit",
    "block_score",
    "bound_value",
    "build_plane_graph",
    "canonical_form",
    "classify_block",
    "contains_k4",
    "corpus_emit",
    "edge_contribution",
    "embed",
    "family_from_name",
    "find_cycle_of_length",
    "find_k4",
    "gen_g0",
    "gen_h0",
    "gen_ring_extension",
    "gen_theorem2",
    "gen_theorem4",
    "gen_triangulation",
    "genus_check",
    "graph_from_canonical",
    "grow_block",
    "has_cycle_of_length",
    "is_family_free",
    "is_planar",
    "lemma1_census",
    "parse_edg",
    "parse_rot",
    "peel",
    "plane_graph_from_faces",
    "search_max_edges",
    "serialize_edg",
    "serialize_rot",
    "trace_faces",
    "triangular_blocks",
    "two_connected_census",
    "__version__",
]
