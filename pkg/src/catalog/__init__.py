"""
Catalog module: parameter sweeps, table reproduction and record emission.
"""

from .models import (
    QuantumCodeRecord,
    RowDiff,
    SweepSpec,
    TableReport,
)

__all__ = [
    "QuantumCodeRecord",
    "RowDiff",
    "SweepSpec",
    "TableReport",
]

# Note: Import engine and tables directly to avoid circular imports:
# from src.catalog.engine import CatalogEngine
# from src.catalog.tables import reproduce_tables
# from src.catalog.export import emit
