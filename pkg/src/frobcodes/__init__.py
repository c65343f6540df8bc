"""Half-dimension linear codes over F_p from the Frobenius involution.

The field F_{p^2k} splits under x -> x^(p^k) into V+ = F_{p^k} and V-;
each point of the projective line over F_{p^k} then gives one
k-dimensional code of length 2k over F_p.
"""

from .codes import (
    INFINITY,
    LinearCode,
    ProjectivePoint,
    StandardForm,
    check_matrix,
    contains,
    enumerate_points,
    generate_all,
    min_distance,
    pluecker_coords,
    standard_form,
    theta_embed,
)
from .ext_field import FieldCtx, FieldElem
from .field_core import factorize, find_irreducible, fp_inv, is_irreducible, poly_rem
from .frobenius import DecompositionCtx
from .grassmann import gl_order, grass_count
from .linalg import Matrix, row_space_equal

__version__ = "0.1.0"

__all__ = [
    "DecompositionCtx",
    "FieldCtx",
    "FieldElem",
    "INFINITY",
    "LinearCode",
    "Matrix",
    "ProjectivePoint",
    "StandardForm",
    "check_matrix",
    "contains",
    "enumerate_points",
    "factorize",
    "find_irreducible",
    "fp_inv",
    "generate_all",
    "gl_order",
    "grass_count",
    "is_irreducible",
    "min_distance",
    "pluecker_coords",
    "poly_rem",
    "row_space_equal",
    "standard_form",
    "theta_embed",
]
