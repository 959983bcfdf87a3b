"""Weighted Fermat points of a triangle via isogonal conjugacy."""

from .errors import GeometryError
from .fermat import (
    FermatSolution,
    Weights,
    objective_mixed,
    objective_positive,
    solve_mixed,
    solve_positive,
    weight_angles,
)
from .geometry import AngleTriple, Circle, Point2, Triangle
from .isogonal import (
    classify_conjugacy,
    classify_region,
    cross_terms,
    hayashi_check,
    isogonal_conjugate,
    signed_form,
)
from .pedal import locate_exterior, locate_interior, pedal_of

__all__ = [
    "AngleTriple",
    "Circle",
    "FermatSolution",
    "GeometryError",
    "Point2",
    "Triangle",
    "Weights",
    "classify_conjugacy",
    "classify_region",
    "cross_terms",
    "hayashi_check",
    "isogonal_conjugate",
    "locate_exterior",
    "locate_interior",
    "objective_mixed",
    "objective_positive",
    "pedal_of",
    "signed_form",
    "solve_mixed",
    "solve_positive",
    "weight_angles",
]
