"""Exact and constructive solvers for placing a graph H onto a graph G so that
the union of edges becomes connected or 2-edge-connected."""

from .assignment import AuxBipartite, MatchingResult, hungarian, min_weight_saturating_matching
from .biconnect import decide_2connect, solve_2connect
from .connect import CoverTooLarge, Solution, decide_connect, solve_connect
from .formats import FormatError, parse_instance, parse_mapping, serialize_instance, serialize_mapping
from .generators import (
    GenParams,
    Instance,
    gen_random,
    reduce_biconnectivity_augmentation,
    reduce_hamiltonian_path,
    reduce_subgraph_isomorphism,
)
from .graph import (
    BlockDecomposition,
    Graph,
    GraphError,
    Mapping,
    WeightFn,
    block_decomposition,
    is_k_edge_connected,
    stats,
    superpose,
)
from .oracle import OracleTooLarge, brute_force_feasible, brute_force_optimum, edge_connectivity
from .unweighted import construct_2connect, construct_connect, feasible_2connect, feasible_connect

__version__ = "0.1.0"
