"""Steiner triple systems: closure, spreading and saturating sets.

The package models (partial) Steiner triple systems, the closure operator
generated by completing covered pairs, and the two families of generating
sets it induces: spreading sets (closure reaches everything) and saturating
sets (one neighbour step reaches everything).  It ships the classical
geometric systems PG(d,2) and AG(d,3), a perturbed projective construction
whose minimal spreading sets undercut the projective maximum, a two-sizes
construction with minimal spreading sets of different cardinalities,
hill-climbing completion of partial systems, and exact saturation bounds.
"""

from .closure import (
    ClosedSetEnumeration,
    ClosureTrace,
    closure,
    closure_points,
    enumerate_closed_sets,
    is_saturating_set,
    is_spreading_set,
    is_spreading_system,
    neighbors,
)
from .completion import (
    CompletionReport,
    complete_partial,
    next_admissible,
    random_sts,
    two_minimal_sizes_sts,
)
from .constructions import (
    Section4Artifacts,
    ag3,
    find_triangle,
    perturbed_pg,
    pg2,
    section4_partial,
    subsystem_free_sts15,
)
from .errors import (
    BadOrderError,
    BudgetExhaustedError,
    DuplicatePairError,
    EmptyDifferenceSetError,
    FrozenConflictError,
    InadmissibleOrderError,
    NoTriangleAlignmentError,
    NoTriangleError,
    NotPrimePowerError,
    NotProjectiveTagError,
    NotSpreadingError,
    NotSteinerError,
    OutOfRangeError,
    ParseError,
    SamePointError,
    SearchExhaustedError,
    StsError,
    TooLargeError,
    TrivialOrderError,
)
from .saturation import (
    DeviationReport,
    ExtremesReport,
    HyperplaneFamily,
    SaturationBound,
    compute_saturation_bound,
    deviating_hyperplane,
    hyperplanes_pg2,
    intersection_extremes,
    lunelli_sce_min,
    min_saturating_size,
    refined_saturating_bound,
    variance_identity,
)
from .spreading import (
    DimensionCheckReport,
    SpreadingEnumeration,
    SpreadingSearchResult,
    check_projective,
    enumerate_minimal_spreading_sets,
    greedy_spreading_set,
    min_spreading_size,
    reduce_to_minimal,
    verify_dimension_theorem,
)
from .system import (
    GeometryTag,
    PointSet,
    SystemKind,
    TripleSystem,
    build_system,
    induced_subsystem,
    parse,
    parse_labels,
    serialize,
    serialize_labels,
    steiner_admissible,
    validate_pairwise,
    with_labels,
)

__version__ = "0.1.0"

__all__ = [
    "ClosedSetEnumeration",
    "ClosureTrace",
    "CompletionReport",
    "DeviationReport",
    "DimensionCheckReport",
    "ExtremesReport",
    "GeometryTag",
    "HyperplaneFamily",
    "PointSet",
    "SaturationBound",
    "Section4Artifacts",
    "SpreadingEnumeration",
    "SpreadingSearchResult",
    "SystemKind",
    "TripleSystem",
    "ag3",
    "build_system",
    "check_projective",
    "closure",
    "closure_points",
    "complete_partial",
    "compute_saturation_bound",
    "deviating_hyperplane",
    "enumerate_closed_sets",
    "enumerate_minimal_spreading_sets",
    "find_triangle",
    "greedy_spreading_set",
    "hyperplanes_pg2",
    "induced_subsystem",
    "intersection_extremes",
    "is_saturating_set",
    "is_spreading_set",
    "is_spreading_system",
    "lunelli_sce_min",
    "min_saturating_size",
    "min_spreading_size",
    "neighbors",
    "next_admissible",
    "parse",
    "parse_labels",
    "perturbed_pg",
    "pg2",
    "random_sts",
    "reduce_to_minimal",
    "refined_saturating_bound",
    "section4_partial",
    "serialize",
    "serialize_labels",
    "steiner_admissible",
    "subsystem_free_sts15",
    "two_minimal_sizes_sts",
    "validate_pairwise",
    "variance_identity",
    "verify_dimension_theorem",
    "with_labels",
    # errors
    "StsError",
    "BadOrderError",
    "BudgetExhaustedError",
    "DuplicatePairError",
    "EmptyDifferenceSetError",
    "FrozenConflictError",
    "InadmissibleOrderError",
    "NoTriangleAlignmentError",
    "NoTriangleError",
    "NotPrimePowerError",
    "NotProjectiveTagError",
    "NotSpreadingError",
    "NotSteinerError",
    "OutOfRangeError",
    "ParseError",
    "SamePointError",
    "SearchExhaustedError",
    "TooLargeError",
    "TrivialOrderError",
]
