"""Multicurve graphs on surfaces: ranks, classification, and verification tools."""

from .surfaces import SurfaceSig, PieceSig, complexity, euler, is_essential_piece
from .formulas import (
    Classification,
    classify_closed_form,
    euler_cost,
    max_piece_count,
    quasiflat_rank,
    witness_threshold,
)
from .decompositions import (
    CutDecomposition,
    GluingPattern,
    classify_exhaustive,
    disjoint_pair_exists,
    disjoint_pairs_are_complements,
    enumerate_decompositions,
    gluing_feasible,
    max_piece_count_search,
)

__all__ = [
    "SurfaceSig",
    "PieceSig",
    "complexity",
    "euler",
    "is_essential_piece",
    "Classification",
    "classify_closed_form",
    "euler_cost",
    "max_piece_count",
    "quasiflat_rank",
    "witness_threshold",
    "CutDecomposition",
    "GluingPattern",
    "classify_exhaustive",
    "disjoint_pair_exists",
    "disjoint_pairs_are_complements",
    "enumerate_decompositions",
    "gluing_feasible",
    "max_piece_count_search",
]
