"""Combinatorics of stable reduction for elliptic surfaces over a curve.

Exact 1/12-lattice arithmetic, decorated sliced/pruned trees, the pruning
algorithm, surface-numeric formulas, exhaustive enumeration at fixed height
and Weierstrass vanishing-order classification.
"""

from .errors import (
    CapExceeded,
    DegenerateCurve,
    DomainError,
    EpsilonOutOfRange,
    FracLatticeError,
    HeightTooSmall,
    InconsistentOrders,
    InvalidOrder,
    InvalidTree,
    MarkingNotInTable,
    MarkingOutsideTable,
    NonPositiveTotalWeight,
    NotLC,
    UnknownVertex,
)
from .fracs import (
    Frac12,
    KodairaType,
    SlicingPair,
    allowed_klt_markings,
    frac,
    is_klt_marking,
    kodaira_of_marking,
    slicing_of_kodaira,
)
from .trees import (
    Edge,
    PrunedTree,
    SlicedTree,
    ValidationReport,
    Violation,
    canonical_key,
    height,
    is_pruned_stable,
    is_tsm_stable,
    sum_weights,
    validate_pruned,
    validate_sliced,
    weight,
)
from .pruning import (
    PruneEvent,
    PruneTrace,
    prune,
    prune_with_order,
)
from .surface import (
    ComponentData,
    FlipRecord,
    component_of_vertex,
    epsilon_data,
    flip_update,
    ksb_volume,
    ksba_window,
    log_intersection,
    moduli_dimension,
    pair_volume,
    section_self_intersection,
)
from .enumeration import (
    Census,
    CensusEntry,
    EnumerationParams,
    enumerate_pruned,
    enumerate_sliced,
    prune_census,
    random_sliced_tree,
)
from .weierstrass import (
    PointClass,
    PointData,
    WeierstrassProfile,
    classify_point,
    classify_profile,
    cusp_condition,
    kodaira_from_orders,
    lc_factorize,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
