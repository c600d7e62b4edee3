"""
Twisted convolution, the Weyl product and Weyl quantization.
"""

from .convolution import (
    CONVENTIONS,
    chirp_oversampling,
    chirp_twisted_convolution,
    twisted_convolution,
    twisted_convolution_direct,
)
from .symbols import (
    ConstantSymbol,
    HeatSymbol,
    QuadraticSymbol,
    RegisteredSymbol,
    is_registered,
    make_symbol,
    symbol_of,
)
from .weyl import (
    kernel_to_symbol,
    sampled_symbol_kernel,
    sampled_weyl_apply,
    symbol_to_kernel,
    weyl_apply,
    weyl_product,
)

__all__ = [
    "CONVENTIONS",
    "ConstantSymbol",
    "HeatSymbol",
    "QuadraticSymbol",
    "RegisteredSymbol",
    "chirp_oversampling",
    "chirp_twisted_convolution",
    "is_registered",
    "kernel_to_symbol",
    "make_symbol",
    "sampled_symbol_kernel",
    "sampled_weyl_apply",
    "symbol_of",
    "symbol_to_kernel",
    "twisted_convolution",
    "twisted_convolution_direct",
    "weyl_apply",
    "weyl_product",
]
