"""Exact census of numerical semigroups stratified by even gaps."""

__version__ = "0.1.0"

from .core import EvenGapProfile, Semigroup, from_gap_set, from_generators, naturals
from .closedsets import (
    BoundsRow,
    ClosedSet,
    FiberReport,
    bounds,
    closed_sets,
    count_closed_sets,
    fiber_report,
    stable_count,
)
from .strata import (
    HalfDecomposition,
    canonical_form,
    decompose,
    double_with_tail,
    one_half,
    reassemble,
    stratum_translation_check,
    symmetric_double,
    translate,
)
from .tree import (
    MonotonicityRow,
    StratumRow,
    TreeNode,
    census,
    count_stratum,
    enumerate_genus,
    iter_genus,
    iter_stratum,
    monotonicity_report,
    n_sequence,
    stratum_row,
    walk,
)

__all__ = [
    "BoundsRow",
    "ClosedSet",
    "EvenGapProfile",
    "FiberReport",
    "HalfDecomposition",
    "MonotonicityRow",
    "Semigroup",
    "StratumRow",
    "TreeNode",
    "bounds",
    "canonical_form",
    "census",
    "closed_sets",
    "count_closed_sets",
    "count_stratum",
    "decompose",
    "double_with_tail",
    "enumerate_genus",
    "fiber_report",
    "from_gap_set",
    "from_generators",
    "iter_genus",
    "iter_stratum",
    "monotonicity_report",
    "n_sequence",
    "naturals",
    "one_half",
    "reassemble",
    "stable_count",
    "stratum_row",
    "stratum_translation_check",
    "symmetric_double",
    "translate",
    "walk",
]
