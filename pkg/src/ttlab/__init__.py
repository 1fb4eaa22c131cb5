"""Exact extremal, counting, and structure computations for digraphs
that avoid blow-ups of transitive tournaments.

The public surface is re-exported here; see the module docstrings of
core, embed, search, census, container, and cli for the conventions.
"""

from .core import (
    BOTH,
    BWD,
    DIGRAPH,
    FWD,
    MAX_VERTICES,
    MODES,
    NO_ARC,
    ORIENTED,
    BlowupSpec,
    CapacityError,
    Digraph,
    Partition,
    TdgParseError,
    Weight,
    WeightedValue,
    blowup,
    decode,
    encode,
    make_dtr,
    pair_index,
    pair_list,
    turan_edges,
    turan_part_sizes,
    turan_partition,
    weighted_size,
)
from .embed import (
    Embedding,
    automorphism_count,
    contains,
    count_copies,
    count_embeddings,
    is_free,
    partition_ok,
)
from .search import (
    EditDistanceResult,
    ExtremalResult,
    edit_distance_to_dtr,
    extremal,
    extremal_naive,
)
from .census import (
    CensusReport,
    admits_partition,
    count_free,
    count_free_naive,
    count_partite,
    lower_bound_partite,
    ratio_report,
)
from .container import (
    ContainerBound,
    DensityResult,
    container_exponent,
    density_m,
)

__version__ = "0.1.0"

__all__ = [
    "BOTH",
    "BWD",
    "BlowupSpec",
    "CapacityError",
    "CensusReport",
    "ContainerBound",
    "DIGRAPH",
    "DensityResult",
    "Digraph",
    "EditDistanceResult",
    "Embedding",
    "ExtremalResult",
    "FWD",
    "MAX_VERTICES",
    "MODES",
    "NO_ARC",
    "ORIENTED",
    "Partition",
    "TdgParseError",
    "Weight",
    "WeightedValue",
    "admits_partition",
    "automorphism_count",
    "blowup",
    "container_exponent",
    "contains",
    "count_copies",
    "count_embeddings",
    "count_free",
    "count_free_naive",
    "count_partite",
    "decode",
    "density_m",
    "edit_distance_to_dtr",
    "encode",
    "extremal",
    "extremal_naive",
    "is_free",
    "lower_bound_partite",
    "make_dtr",
    "pair_index",
    "pair_list",
    "partition_ok",
    "ratio_report",
    "turan_edges",
    "turan_part_sizes",
    "turan_partition",
    "weighted_size",
    "__version__",
]
