"""Output-linear enumeration of maximal independent sets in caterpillar
trees whose backbone vertices carry any number of length-1 hairs and at
most one length-2 hair."""

from .caterpillar import (
    CaterpillarDecomposition,
    ExpansionMap,
    StageNames,
    StageProfile,
    expand_set,
    gen_random,
    normalize,
    parse_spec,
    recognize,
    serialize_spec,
    to_tree,
)
from .enumeration import (
    enumerate_instance,
    enumerate_mis,
    iter_path_indices,
    iter_paths,
    reconstruct_stage,
    verify_mis,
)
from .errors import (
    CatmisError,
    EmptyInputError,
    IllegalKindError,
    InvalidKError,
    NotATreeError,
    NotGeneralizedCaterpillarError,
    ParseError,
    TooLargeError,
    UnknownVertexError,
)
from .graph import Tree, parse_edge_list, serialize_edge_list
from .level_graph import (
    ALLOWED_TYPE_PAIRS,
    LevelGraph,
    LevelVertex,
    build,
    count_paths,
    export_dot,
)
from .oracle import MAX_ORACLE_VERTICES, oracle_enumerate

__version__ = "0.1.0"

__all__ = [
    "ALLOWED_TYPE_PAIRS",
    "CaterpillarDecomposition",
    "CatmisError",
    "EmptyInputError",
    "ExpansionMap",
    "IllegalKindError",
    "InvalidKError",
    "LevelGraph",
    "LevelVertex",
    "MAX_ORACLE_VERTICES",
    "NotATreeError",
    "NotGeneralizedCaterpillarError",
    "ParseError",
    "StageNames",
    "StageProfile",
    "TooLargeError",
    "Tree",
    "UnknownVertexError",
    "build",
    "count_paths",
    "enumerate_instance",
    "enumerate_mis",
    "expand_set",
    "export_dot",
    "gen_random",
    "iter_path_indices",
    "iter_paths",
    "normalize",
    "oracle_enumerate",
    "parse_edge_list",
    "parse_spec",
    "recognize",
    "reconstruct_stage",
    "serialize_edge_list",
    "serialize_spec",
    "to_tree",
    "verify_mis",
]
