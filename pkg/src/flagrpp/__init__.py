"""Flagged reverse plane partitions, their crystal structure, and key expansions
of flagged dual stable Grothendieck polynomials."""

from .crystal import CrystalSet, demazure_generate, demazure_match, verify_demazure_union
from .insertion import Biword, burge, burge_inverse, matrix_to_biword
from .keypoly import grothendieck_poly, key_expand, key_polynomial
from .perms import Permutation
from .polynomial import Polynomial
from .shapes import Rpp, SkewShape, Ssyt, enumerate_rpps, height, reading_word, weight
from .theorem import DeskLimits, verify_main_theorem

__version__ = "0.1.0"

__all__ = [
    "Biword", "CrystalSet", "DeskLimits", "Permutation", "Polynomial", "Rpp", "SkewShape", "Ssyt",
    "burge", "burge_inverse", "demazure_generate", "demazure_match", "enumerate_rpps",
    "grothendieck_poly", "height", "key_expand", "key_polynomial", "matrix_to_biword",
    "reading_word", "verify_demazure_union", "verify_main_theorem", "weight",
]
