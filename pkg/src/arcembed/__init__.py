"""Exact analysis of piecewise-linear interval maps and synthesis of planar
embeddings of truncated inverse limits with an accessible center point."""

from .errors import (
    ArcEmbedError,
    BoundaryError,
    CenterError,
    CompositionError,
    ConstructionError,
    DomainError,
    HypothesisError,
    InternalConsistencyError,
    MapFormatError,
    RefineError,
    StitchPreconditionError,
)
from .plmap import (
    PLMap,
    Rational,
    compose,
    evaluate,
    from_pairs,
    identity_map,
    map_from_json,
    map_to_json,
    negation_map,
    rat,
    recenter,
    validate,
)
from .contour import (
    DepartureReport,
    contour_equivalent,
    contour_factor,
    contour_points,
    departures,
    meandering_factor,
)
from .radial import (
    RadialDeparture,
    RadialProfile,
    no_contour_twins,
    radial_contour_factor,
    radial_departure_check,
    radial_meandering_factor,
    radial_profile,
    same_radial_departures,
)
from .stitch import (
    StitchResult,
    SystemReindex,
    contour_stable,
    reindex_system,
    stitched_factor,
    verify_stitch,
)

__version__ = "0.1.0"

__all__ = [
    "ArcEmbedError", "BoundaryError", "CenterError", "CompositionError",
    "ConstructionError", "DomainError", "HypothesisError",
    "InternalConsistencyError", "MapFormatError", "RefineError",
    "StitchPreconditionError",
    "PLMap", "Rational", "compose", "evaluate", "from_pairs", "identity_map",
    "map_from_json", "map_to_json", "negation_map", "rat", "recenter",
    "validate",
    "DepartureReport", "contour_equivalent", "contour_factor",
    "contour_points", "departures", "meandering_factor",
    "RadialDeparture", "RadialProfile", "no_contour_twins",
    "radial_contour_factor", "radial_departure_check",
    "radial_meandering_factor", "radial_profile", "same_radial_departures",
    "StitchResult", "SystemReindex", "contour_stable", "reindex_system",
    "stitched_factor", "verify_stitch",
]
