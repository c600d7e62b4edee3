"""
twistlab

Phase-space operator calculus of the twisted Laplacian on sampled grids:
transforms, mixed norms, the twisted convolution algebra, spectral
multipliers and the heat, fractional heat, Schrödinger and wave flows.
"""

__version__ = "0.1.0"
