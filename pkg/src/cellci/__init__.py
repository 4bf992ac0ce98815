"""Complete-intersection analysis for inner 2-minor ideals of collections of cells."""

from cellci.grid import (
    Cell,
    CellCollection,
    Interval,
    Point,
    cells_in_rectangle,
    inner_intervals,
    is_chessboard,
    is_inner_interval,
    minimal_bounding_rectangle,
    weakly_connected_components,
)
from cellci.ideal import Binomial, IdealPresentation, Monomial, adjacent_minors, generators, inner_minor, mu
from cellci.decide import (
    AnalysisReport,
    CiCertificate,
    TheoremViolation,
    check_theorem_exhaustive,
    is_complete_intersection,
    verify_algebraically,
)

__all__ = [
    "AnalysisReport",
    "Binomial",
    "Cell",
    "CellCollection",
    "CiCertificate",
    "IdealPresentation",
    "Interval",
    "Monomial",
    "Point",
    "TheoremViolation",
    "adjacent_minors",
    "cells_in_rectangle",
    "check_theorem_exhaustive",
    "generators",
    "inner_intervals",
    "inner_minor",
    "is_chessboard",
    "is_complete_intersection",
    "is_inner_interval",
    "minimal_bounding_rectangle",
    "mu",
    "verify_algebraically",
    "weakly_connected_components",
]
