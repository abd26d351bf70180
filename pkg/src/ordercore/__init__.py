"""Dynamic k-core maintenance: order-based engine, traversal baseline,
static decomposition, brute-force oracles, generators, benchmark harness."""

from .decomp import (
    CoreState,
    compute_mcd,
    compute_pcd,
    core_decompose,
    validate_korder,
)
from .graph import DynamicGraph, LoadReport, load_edge_list, load_edge_list_path
from .oracle import naive_cores
from .order_engine import OrderEngine
from .order_index import CandidateHeap, KOrder
from .traversal_engine import TraversalEngine
from .updates import UpdateResult

__all__ = [
    "CandidateHeap",
    "CoreState",
    "DynamicGraph",
    "KOrder",
    "LoadReport",
    "OrderEngine",
    "TraversalEngine",
    "UpdateResult",
    "compute_mcd",
    "compute_pcd",
    "core_decompose",
    "load_edge_list",
    "load_edge_list_path",
    "naive_cores",
    "validate_korder",
]
