"""
Phase-space module: Gabor, symplectic Gabor, ambiguity and Wigner transforms,
mixed norms and the boundedness index conditions.
"""

from .field import PhaseSpaceField
from .indices import (
    admissibility_forms_agree,
    heat_index_constants,
    lebesgue_exponent,
    weyl_product_admissible,
    weyl_product_admissible_restated,
)
from .norms import (
    default_window,
    field_norm,
    gaussian_amalgam_norm,
    lebesgue_embedding_ratios,
    mixed_norm,
    polynomial_weight,
)
from .transforms import (
    ambiguity,
    as_field,
    gabor_transform,
    symplectic_gabor,
    wigner,
    wigner_grid,
)

__all__ = [
    "PhaseSpaceField",
    "admissibility_forms_agree",
    "ambiguity",
    "as_field",
    "default_window",
    "field_norm",
    "gabor_transform",
    "gaussian_amalgam_norm",
    "heat_index_constants",
    "lebesgue_embedding_ratios",
    "lebesgue_exponent",
    "mixed_norm",
    "polynomial_weight",
    "symplectic_gabor",
    "weyl_product_admissible",
    "weyl_product_admissible_restated",
    "wigner",
    "wigner_grid",
]
