"""
Quantum Singleton and Gilbert-Varshamov bounds.
"""

from .models import GvInterval, QgvVerdict, SingletonClassification

__all__ = [
    "GvInterval",
    "QgvVerdict",
    "SingletonClassification",
]

# Note: Import bound functions directly:
# from src.bounds.singleton import classify_singleton
# from src.bounds.gilbert_varshamov import qgv, gv_interval, qgv_threshold_d3, qgv_scan_threshold
