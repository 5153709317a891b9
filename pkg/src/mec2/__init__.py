"""Exact and parameterised solvers for maximum 2-edge-colourable subgraphs."""

from .branchdp import solve_branchdp
from .cyclespace import feedback_edge_set, solve_cyclespace, solve_logedge
from .decomposition import (
    BranchDecomposition,
    TreeDecomposition,
    heuristic_branch_decomposition,
    treedecomp_to_branchdecomp,
)
from .deletion import (
    DeletionCertificate,
    solve_edge_deletion,
    solve_vertex_deletion,
)
from .dense import decide_nu2_at_least, dispatch, solve_dense
from .errors import (
    DecompositionError,
    FormatError,
    GraphError,
    Mec2Error,
    OracleRefused,
    PreconditionError,
    UnsupportedInstance,
)
from .forest import solve_forest
from .graph import EdgeColoring, Graph, is_2ec_feasible, validate_coloring
from .oracle import nu_k_brute, solve_brute
from .solution import Solution

__all__ = [
    "BranchDecomposition",
    "DecompositionError",
    "DeletionCertificate",
    "EdgeColoring",
    "FormatError",
    "Graph",
    "GraphError",
    "Mec2Error",
    "OracleRefused",
    "PreconditionError",
    "Solution",
    "TreeDecomposition",
    "UnsupportedInstance",
    "decide_nu2_at_least",
    "dispatch",
    "feedback_edge_set",
    "heuristic_branch_decomposition",
    "is_2ec_feasible",
    "nu_k_brute",
    "solve_branchdp",
    "solve_brute",
    "solve_cyclespace",
    "solve_dense",
    "solve_edge_deletion",
    "solve_forest",
    "solve_logedge",
    "solve_vertex_deletion",
    "treedecomp_to_branchdecomp",
    "validate_coloring",
]
