"""Exact computations in the Calogero-Moser spaces C_n."""

from .poly import Poly, Rational
from .linalg import (DimensionError, Matrix, charpoly, commutator_plus_identity,
                     det, is_nilpotent, kernel_basis, mat_mul, mat_poly_eval,
                     minpoly, rank)
from .points import (CMPoint, DuplicateEigenvalue, RankConditionViolated,
                     base_point, diagonal_point, nilpotent_points, subdiag_point,
                     validate)
from .automorphisms import (Phi, Psi, Scale, Word, act, compose, fixes,
                            inverse, isotropy_element)
from .conjugacy import are_conjugate, intertwiners, invertible_in_span

__all__ = [
    "Poly", "Rational", "DimensionError", "Matrix", "charpoly",
    "commutator_plus_identity", "det", "is_nilpotent", "kernel_basis", "mat_mul",
    "mat_poly_eval", "minpoly", "rank", "CMPoint", "DuplicateEigenvalue",
    "RankConditionViolated", "base_point", "diagonal_point", "nilpotent_points",
    "subdiag_point", "validate", "Phi", "Psi", "Scale", "Word", "act", "compose",
    "fixes", "inverse", "isotropy_element", "are_conjugate", "intertwiners",
    "invertible_in_span",
]

__version__ = "0.1.0"
