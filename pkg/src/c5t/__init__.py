"""Triangles in C5-free graphs: block decomposition, triangle-to-edge reduction,
extremal constructions and exact small-n search."""

__version__ = "0.1.0"

from .graph import Graph, GraphError, Triangle, add_edge, edge, from_edge_list, new_graph, to_edge_list
from .detect import count_triangles, creates_c5, enumerate_triangles, find_c4, find_c5, girth
from .blocks import (
    Block,
    BlockDecomposition,
    Crown,
    Invalid,
    K4Block,
    check_claim1,
    check_claim2,
    classify_block,
    decompose_blocks,
    strip_nontriangle_edges,
)
from .reduce import ReductionResult, select_edges, verify_reduction
from .construct import (
    BipartiteGraph,
    bg_double,
    bg_projective,
    named_graph,
    projective_plane_incidence,
    random_c5_free,
)
from .bounds import CONSTANTS, BoundConstant, BoundReport, eval_bound, report
from .search import SearchRecord, exact_ex, search_table
from .errors import C5Present, ContractViolation, Verification
