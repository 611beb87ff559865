"""Extremes of domination and independence numbers over forests.

Given a degree sequence, the package evaluates closed forms for the
largest domination number and the smallest independence number over all
realizing forests, builds certificate realizations attaining them, and
verifies both against exhaustive enumeration at small orders.
"""

from .construct import (
    ExtremalCertificate,
    InfeasibleSplitError,
    PreconditionError,
    all_support_tree,
    extremal_build,
    matched_support_forest,
    random_forest,
    realize_any,
)
from .degseq import (
    Branch,
    DegreeSequence,
    DegreeSequenceError,
    NotPeelableError,
    OddSumError,
    SequenceStats,
    TooManyEdgesError,
    branch,
    peel_k2,
    validate,
)
from .forest import (
    CycleDetectedError,
    DuplicateEdgeError,
    Forest,
    ForestError,
    ForestFormatError,
    LabelOutOfRangeError,
    NotConnectedError,
    SelfLoopError,
    VertexSet,
    from_json,
    from_text,
    read_forest,
    write_forest,
)
from .formulas import ExtremalValues, alpha_min, extremal_values, gamma_max
from .oracle import (
    DEFAULT_SIZE_CAP,
    DEFAULT_SWEEP_MAX_N,
    EnumerationReport,
    SizeCapExceededError,
    empirical_extremes,
    enumerate_realizations,
    swap_search_gamma,
    sweep_sequences,
)

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "CycleDetectedError",
    "DEFAULT_SIZE_CAP",
    "DEFAULT_SWEEP_MAX_N",
    "DegreeSequence",
    "DegreeSequenceError",
    "DuplicateEdgeError",
    "EnumerationReport",
    "ExtremalCertificate",
    "ExtremalValues",
    "Forest",
    "ForestError",
    "ForestFormatError",
    "InfeasibleSplitError",
    "LabelOutOfRangeError",
    "NotConnectedError",
    "NotPeelableError",
    "OddSumError",
    "PreconditionError",
    "SelfLoopError",
    "SequenceStats",
    "SizeCapExceededError",
    "TooManyEdgesError",
    "VertexSet",
    "all_support_tree",
    "alpha_min",
    "branch",
    "empirical_extremes",
    "enumerate_realizations",
    "extremal_build",
    "extremal_values",
    "from_json",
    "from_text",
    "gamma_max",
    "matched_support_forest",
    "peel_k2",
    "random_forest",
    "read_forest",
    "realize_any",
    "swap_search_gamma",
    "sweep_sequences",
    "validate",
    "write_forest",
]
