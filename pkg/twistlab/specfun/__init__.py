"""
Special functions: Hermite and Laguerre families, special Hermite functions,
the basis catalog and M¹ growth tables.
"""

from .catalog import BasisCatalog, CatalogCache
from .growth import GrowthRow, fit_growth_exponent, hermite_m1_norm, m1_norm_growth_table
from .hermite import (
    MultiIndex,
    hermite_function,
    hermite_matrix,
    hermite_nd,
    hermite_table,
    indices_of_order,
    indices_up_to,
)
from .laguerre import (
    laguerre_function,
    laguerre_generating_function,
    laguerre_generating_sum,
    laguerre_polynomial,
)
from .special_hermite import (
    gaussian_dilated,
    laguerre_kernel,
    special_hermite,
    special_hermite_diagonal,
)

__all__ = [
    "BasisCatalog",
    "CatalogCache",
    "GrowthRow",
    "MultiIndex",
    "fit_growth_exponent",
    "gaussian_dilated",
    "hermite_function",
    "hermite_m1_norm",
    "hermite_matrix",
    "hermite_nd",
    "hermite_table",
    "indices_of_order",
    "indices_up_to",
    "laguerre_function",
    "laguerre_generating_function",
    "laguerre_generating_sum",
    "laguerre_kernel",
    "laguerre_polynomial",
    "m1_norm_growth_table",
    "special_hermite",
    "special_hermite_diagonal",
]
