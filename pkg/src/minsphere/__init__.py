"""Exact symbolic verification of constant-curvature minimal two-spheres.

The package works with polynomial projective representatives over the field
Q(i) adjoined square roots, so every identity is checked with zero tolerance.
"""
from .scalar import RadicalScalar, sqrt, I
from .polyring import BiPoly, RationalFn, Z, ZBAR, log_laplacian
from .curves import VectorCurve, veronese, osculating_flag
from .geometry import projector, pair_geometry, gauss_curvature, sff_norm

__all__ = [
    "RadicalScalar", "sqrt", "I",
    "BiPoly", "RationalFn", "Z", "ZBAR", "log_laplacian",
    "VectorCurve", "veronese", "osculating_flag",
    "projector", "pair_geometry", "gauss_curvature", "sff_norm",
]
