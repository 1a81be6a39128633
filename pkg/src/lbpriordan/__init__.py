"""Exact Riordan-array toolkit for Laurent biorthogonal polynomials."""

from .families import (
    FamilyParams,
    GenFamilyParams,
    Variant,
    assoc_orthogonal,
    gen_triangle,
    lbp_triangle,
)
from .moments import hankel_transform, jfraction_from_moments
from .riordan import RiordanArray, Triangle, inv, make
from .series import RatFunc, Series, expand

__version__ = "0.1.0"

__all__ = [
    "FamilyParams",
    "GenFamilyParams",
    "RatFunc",
    "RiordanArray",
    "Series",
    "Triangle",
    "Variant",
    "assoc_orthogonal",
    "expand",
    "gen_triangle",
    "hankel_transform",
    "inv",
    "jfraction_from_moments",
    "lbp_triangle",
    "make",
]
