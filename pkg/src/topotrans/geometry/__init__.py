from .families import (
    InstanceReport,
    build_Leta_family,
    plant_family,
    random_leta_coords,
    verify_theorem_on_instance,
)
from .polytope import (
    ColoredFamily,
    FlatCandidate,
    GeometryError,
    Polytope,
    check_heterochromatic,
    check_heterochromatic_semintersecting,
    check_semintersecting,
    contains,
    find_point_transversal,
    flat_meets_polytope,
    intersects,
)
from .transversal import SearchOutcome, find_flat_transversal, flat_search

__all__ = [
    "ColoredFamily",
    "FlatCandidate",
    "GeometryError",
    "InstanceReport",
    "Polytope",
    "SearchOutcome",
    "build_Leta_family",
    "check_heterochromatic",
    "check_heterochromatic_semintersecting",
    "check_semintersecting",
    "contains",
    "find_flat_transversal",
    "find_point_transversal",
    "flat_meets_polytope",
    "flat_search",
    "intersects",
    "plant_family",
    "random_leta_coords",
    "verify_theorem_on_instance",
]
