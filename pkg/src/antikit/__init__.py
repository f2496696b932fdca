"""Vertex-shelling antimatroids of split graphs.

Feasibility tests, shellings, the poset decomposition of the feasible
family, maximum-weight feasible sets via minimum cuts, paths, rooted
circuits, free sets, recovery of the graph from its family, and the
edge-cover reduction behind the inapproximability of the general problem.
"""

from __future__ import annotations

from .closure_opt import MAX, MIN, OptResult, brute_force_max_weight, max_closure, max_weight_feasible
from .errors import (
    AntikitError,
    DuplicateEdge,
    ForcedNotClosed,
    FormatError,
    FullPowerSet,
    GroundSetTooLarge,
    IllegalEdge,
    InputError,
    InvalidDelta,
    NormalizationRequired,
    NotAnAntimatroid,
    NotFeasible,
    NotIndependentVertex,
    NotSplitGraph,
    OverlappingPartition,
    Refusal,
    UnknownElement,
    UnknownVertex,
)
from .family import SetFamily, parse_family
from .feasibility import (
    STAR,
    AxiomCheck,
    FeasibleClass,
    classify,
    enumerate_feasible,
    feasible_by_definition,
    fos,
    is_feasible,
    is_m_convex,
    is_shelling,
    partition_feasible,
    shelling,
    ufs,
    verify_antimatroid,
)
from .hardness import (
    ReductionInstance,
    build_reduction,
    extract_independent_set,
    is_feasible_reduction,
    max_feasible_weight,
    reduction_path_poset,
)
from .poset import Poset, build_prec, enumerate_filters, is_filter
from .split_graph import SplitGraph, is_normalized, normalize, parse_graph, validate
from .structure import (
    AntimatroidPath,
    NotSplitShelling,
    RootedCircuit,
    is_free,
    path_poset,
    reconstruct_graph,
    recognize,
    rooted_circuits,
    trace,
)

__all__ = [
    "AntikitError",
    "AntimatroidPath",
    "AxiomCheck",
    "DuplicateEdge",
    "FeasibleClass",
    "ForcedNotClosed",
    "FormatError",
    "FullPowerSet",
    "GroundSetTooLarge",
    "IllegalEdge",
    "InputError",
    "InvalidDelta",
    "MAX",
    "MIN",
    "NormalizationRequired",
    "NotAnAntimatroid",
    "NotFeasible",
    "NotIndependentVertex",
    "NotSplitGraph",
    "NotSplitShelling",
    "OptResult",
    "OverlappingPartition",
    "Poset",
    "ReductionInstance",
    "Refusal",
    "RootedCircuit",
    "STAR",
    "SetFamily",
    "SplitGraph",
    "UnknownElement",
    "UnknownVertex",
    "brute_force_max_weight",
    "build_prec",
    "build_reduction",
    "classify",
    "enumerate_feasible",
    "enumerate_filters",
    "extract_independent_set",
    "feasible_by_definition",
    "fos",
    "is_feasible",
    "is_feasible_reduction",
    "is_filter",
    "is_free",
    "is_m_convex",
    "is_normalized",
    "is_shelling",
    "max_closure",
    "max_feasible_weight",
    "max_weight_feasible",
    "normalize",
    "parse_family",
    "parse_graph",
    "partition_feasible",
    "path_poset",
    "recognize",
    "reconstruct_graph",
    "reduction_path_poset",
    "rooted_circuits",
    "shelling",
    "trace",
    "ufs",
    "validate",
    "verify_antimatroid",
]

__version__ = "0.1.0"
