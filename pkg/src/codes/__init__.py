"""
GMCC construction over GF(q^2).
"""

from .models import CodeParams, GeneratorMatrix, PointGrid, TwistVector

__all__ = [
    "CodeParams",
    "GeneratorMatrix",
    "PointGrid",
    "TwistVector",
]

# Note: Import construction functions directly:
# from src.codes.construction import build_grid, build_twist, generator_matrix
