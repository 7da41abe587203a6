"""
Quantum Singleton bound and MDS / QHAMDS classification.
"""

from ..errors import ParameterError
from .models import SingletonClassification


def classify_singleton(n: int, k: int, d: int) -> SingletonClassification:
    """
    Singleton defect n - (k + 2d - 2) and its label.

    Raises:
        ParameterError: n <= 0, k outside [0, n], d < 1, or parameters
            violating the bound (negative defect)
    """
    if n <= 0 or not 0 <= k <= n or d < 1:
        raise ParameterError(f"invalid parameters [[{n},{k},{d}]]")

    defect = n - (k + 2 * d - 2)
    if defect < 0:
        raise ParameterError(f"[[{n},{k},{d}]] violates the quantum Singleton bound")

    if defect == 0:
        label = "MDS"
    elif defect == 2:
        label = "QHAMDS"
    else:
        label = f"defect({defect})"
    return SingletonClassification(defect=defect, label=label)
