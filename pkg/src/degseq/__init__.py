"""Degree-sequence toolkit.

Graphicality tests and realizations, exact potentially-subgraph decisions,
and degree-sum thresholds with their verification harnesses.
"""
from .errors import (
    ConstraintViolationError,
    DegseqError,
    DemandExceededError,
    EntryTooLargeError,
    InfeasibleSigmaError,
    LayoffIndexError,
    NegativeEntryError,
    NotPotentialError,
    PreconditionUnmetError,
    ResultNegativeError,
    SideConditionUnmetError,
    WorkBoundExceededError,
)
from .extremal import (
    DEFAULT_WORK_BOUND,
    LowerBoundReport,
    ProofPathAuditReport,
    ProofPathResult,
    ThresholdReport,
    brute_force_sigma,
    lower_bound_sum,
    proof_path_audit,
    proof_path_check,
    sample_graphic_sequences,
    sigma_formula,
    special_sequence,
    unique_realization_check,
    verify_lower_bound,
)
from .graphs import (
    PatternSpec,
    SimpleGraph,
    build_removed_pattern,
    complement,
    complete,
    contains_subgraph,
    cycle_graph,
    degree_sequence,
    degree_sequence_census,
    disjoint_union,
    extremal_construction,
    format_graph,
    join,
    parse_graph,
    path_graph,
)
from .potential import (
    CONDITION_IDS,
    NOTE_NOT_GRAPHIC,
    NOTE_PATTERN_TOO_LARGE,
    ConditionAuditReport,
    Placement,
    PotentialDecision,
    WorkBudget,
    complete_with_forced_edges,
    conclusion_check,
    condition_audit,
    hypothesis_check,
    is_potentially_clique_on_top,
    is_potentially_subgraph,
    realization_with_pattern_on_top,
    top_placement,
)
from .sequences import (
    DegreeSequence,
    EnumerationStats,
    candidate_sequences,
    enumerate_graphic_sequences,
    erdos_gallai_margins,
    format_sequence,
    havel_hakimi_realize,
    is_graphic,
    layoff,
    normalize,
    parse_sequence,
    run_over_shards,
)

__version__ = "0.1.0"

__all__ = [
    "CONDITION_IDS",
    "ConditionAuditReport",
    "ConstraintViolationError",
    "DEFAULT_WORK_BOUND",
    "DegreeSequence",
    "DegseqError",
    "DemandExceededError",
    "EntryTooLargeError",
    "EnumerationStats",
    "InfeasibleSigmaError",
    "LayoffIndexError",
    "LowerBoundReport",
    "NOTE_NOT_GRAPHIC",
    "NOTE_PATTERN_TOO_LARGE",
    "NegativeEntryError",
    "NotPotentialError",
    "PatternSpec",
    "Placement",
    "PotentialDecision",
    "PreconditionUnmetError",
    "ProofPathAuditReport",
    "ProofPathResult",
    "ResultNegativeError",
    "SideConditionUnmetError",
    "SimpleGraph",
    "ThresholdReport",
    "WorkBoundExceededError",
    "WorkBudget",
    "brute_force_sigma",
    "build_removed_pattern",
    "candidate_sequences",
    "complement",
    "complete",
    "complete_with_forced_edges",
    "conclusion_check",
    "condition_audit",
    "contains_subgraph",
    "cycle_graph",
    "degree_sequence",
    "degree_sequence_census",
    "disjoint_union",
    "enumerate_graphic_sequences",
    "erdos_gallai_margins",
    "extremal_construction",
    "format_graph",
    "format_sequence",
    "havel_hakimi_realize",
    "hypothesis_check",
    "is_graphic",
    "is_potentially_clique_on_top",
    "is_potentially_subgraph",
    "join",
    "layoff",
    "lower_bound_sum",
    "normalize",
    "parse_graph",
    "parse_sequence",
    "path_graph",
    "proof_path_audit",
    "proof_path_check",
    "realization_with_pattern_on_top",
    "run_over_shards",
    "sample_graphic_sequences",
    "sigma_formula",
    "special_sequence",
    "top_placement",
    "unique_realization_check",
    "verify_lower_bound",
]
