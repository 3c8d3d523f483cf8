"""Exact workbench for a distance-based edge invariant on cactus graphs.

The package computes the edge revised Szeged index in exact quarter-integer
arithmetic, builds the extremal families, evaluates their closed forms,
exhaustively enumerates cacti by vertex and cycle count, and mechanically
audits the inequality and equality claims that tie all of this together.
"""

__version__ = "0.1.0"

from .bounds import (
    BoundCase,
    FamilyRef,
    bundle_closed_form,
    crossover,
    cycle_diff_bound,
    inner_cut_edge_bound,
    inner_cycle_bound,
    minimum_bound,
    mix_closed_form,
    mix_step,
    pendant_diff_bound,
    second_minimum_bound,
)
from .canon import (
    CERT_CAP,
    are_isomorphic,
    automorphism_count,
    canonical_form,
    certificate,
    labeled_copy_count,
)
from .enumeration import (
    ABSOLUTE_CAP,
    DEFAULT_CAP,
    ExtremalReport,
    ExtremalWitness,
    cactus_classes,
    count_cacti,
    enumerate_cacti,
    is_feasible,
    random_cactus,
    search_extremal,
)
from .errors import (
    CapError,
    DisconnectedError,
    FormatError,
    InfeasibleError,
    InvalidGraphError,
    SzegedError,
)
from .families import (
    BundleSpec,
    as_bundle,
    bundle,
    cycle,
    is_quadrangle_bundle,
    is_tailed_quadrangle_bundle,
    path,
    quadrangle_bundle,
    star,
    tailed_quadrangle_bundle,
    triangle_bundle,
)
from .formats import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from .graphs import (
    BlockDecomposition,
    CactusProfile,
    Graph,
    block_decomposition,
    cactus_profile,
    cut_edges,
    graph_from_edges,
    is_cactus,
    is_connected,
)
from .indices import (
    EdgePartition,
    QuarterInt,
    VertexPartition,
    diff_square_sum,
    edge_partition,
    edge_partitions,
    edge_revised_szeged,
    szeged,
    vertex_partition,
    wiener,
)
from .verify import (
    CLAIM_IDS,
    Universe,
    VerificationReport,
    audit_bundle_floor,
    audit_cycle_gaps,
    audit_inner_cut_edge_floor,
    audit_inner_cycle_floor,
    audit_off_quadrangle_floor,
    audit_pendant_edges,
    feasible_pairs,
    sweep_universe,
    verify_bundle_floor_claim,
    verify_cycle_gap_claim,
    verify_inner_cut_edge_claim,
    verify_inner_cycle_claim,
    verify_minimum_exhaustive,
    verify_minimum_formula,
    verify_off_quadrangle_claim,
    verify_pendant_edge_claim,
    verify_second_minimum,
)

__all__ = [
    "ABSOLUTE_CAP",
    "BlockDecomposition",
    "BoundCase",
    "BundleSpec",
    "CERT_CAP",
    "CLAIM_IDS",
    "CactusProfile",
    "CapError",
    "DEFAULT_CAP",
    "DisconnectedError",
    "EdgePartition",
    "ExtremalReport",
    "ExtremalWitness",
    "FamilyRef",
    "FormatError",
    "Graph",
    "InfeasibleError",
    "InvalidGraphError",
    "QuarterInt",
    "SzegedError",
    "Universe",
    "VerificationReport",
    "VertexPartition",
    "are_isomorphic",
    "as_bundle",
    "audit_bundle_floor",
    "audit_cycle_gaps",
    "audit_inner_cut_edge_floor",
    "audit_inner_cycle_floor",
    "audit_off_quadrangle_floor",
    "audit_pendant_edges",
    "automorphism_count",
    "block_decomposition",
    "bundle",
    "bundle_closed_form",
    "cactus_classes",
    "cactus_profile",
    "canonical_form",
    "certificate",
    "count_cacti",
    "crossover",
    "cut_edges",
    "cycle",
    "cycle_diff_bound",
    "diff_square_sum",
    "edge_partition",
    "edge_partitions",
    "edge_revised_szeged",
    "emit_edge_list",
    "emit_graph6",
    "enumerate_cacti",
    "feasible_pairs",
    "graph_from_edges",
    "inner_cut_edge_bound",
    "inner_cycle_bound",
    "is_cactus",
    "is_connected",
    "is_feasible",
    "is_quadrangle_bundle",
    "is_tailed_quadrangle_bundle",
    "labeled_copy_count",
    "minimum_bound",
    "mix_closed_form",
    "mix_step",
    "parse_edge_list",
    "parse_graph6",
    "path",
    "pendant_diff_bound",
    "quadrangle_bundle",
    "random_cactus",
    "search_extremal",
    "second_minimum_bound",
    "star",
    "sweep_universe",
    "szeged",
    "tailed_quadrangle_bundle",
    "triangle_bundle",
    "verify_bundle_floor_claim",
    "verify_cycle_gap_claim",
    "verify_inner_cut_edge_claim",
    "verify_inner_cycle_claim",
    "verify_minimum_exhaustive",
    "verify_minimum_formula",
    "verify_off_quadrangle_claim",
    "verify_pendant_edge_claim",
    "verify_second_minimum",
    "vertex_partition",
    "wiener",
]
