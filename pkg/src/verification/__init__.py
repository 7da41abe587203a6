"""
Verification engines: Hermitian self-orthogonality and exact minimum distance.
"""

from .models import DistanceResult, OrthogonalityReport

__all__ = [
    "DistanceResult",
    "OrthogonalityReport",
]

# Note: Import engines directly to avoid circular imports:
# from src.verification.orthogonality import check_self_orthogonal, monomials_orthogonal
# from src.verification.distance import dual_distance_by_columns, brute_force_dual_distance
# from src.verification.quantum import quantum_params
