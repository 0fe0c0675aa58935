"""Exact Wiener-index change under single shortcut-edge insertion in trees."""

from .bounds import (
    BoundsReport,
    audit,
    build_family_tree,
    claimed_case_formula,
    claimed_upper,
    family_delta,
    family_optimum,
)
from .counting import OpCounter
from .delta import DeltaRecord, ad_prime, delta_direct, delta_from_weights
from .matrixform import CoefficientMatrix, build_F, delta_via_matrix
from .oracle import (
    SimpleGraph,
    delta_oracle,
    set_distance,
    tree_plus_edge,
    wiener_brute,
    wiener_tree_linear,
)
from .randgen import Corpus, SplitMix64, leaf_stats, random_labeled_tree
from .search import SearchReport, best_edge, candidate_pairs, pruning_ratio
from .sweep import SweepState, init_sweep, step_diagonal, step_shift, sweep_path
from .tree import (
    CycleAnatomy,
    Tree,
    anatomize,
    bfs_distances,
    leaves,
    parse_tree,
    path_between,
    serialize_tree,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "CoefficientMatrix",
    "Corpus",
    "CycleAnatomy",
    "DeltaRecord",
    "OpCounter",
    "SearchReport",
    "SimpleGraph",
    "SplitMix64",
    "SweepState",
    "Tree",
    "ad_prime",
    "anatomize",
    "audit",
    "best_edge",
    "bfs_distances",
    "build_F",
    "build_family_tree",
    "candidate_pairs",
    "claimed_case_formula",
    "claimed_upper",
    "delta_direct",
    "delta_from_weights",
    "delta_oracle",
    "delta_via_matrix",
    "family_delta",
    "family_optimum",
    "init_sweep",
    "leaf_stats",
    "leaves",
    "parse_tree",
    "path_between",
    "pruning_ratio",
    "random_labeled_tree",
    "serialize_tree",
    "set_distance",
    "step_diagonal",
    "step_shift",
    "sweep_path",
    "tree_plus_edge",
    "wiener_brute",
    "wiener_tree_linear",
]
