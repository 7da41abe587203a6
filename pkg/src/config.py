"""
Configuration for the GMCC quantum-code toolkit.

This module centralizes all tunable parameters including:
- Finite-field size limits
- Distance-search work budgets
- Bound evaluation constants
- Catalog / golden-table locations
- Logging configuration
"""

import os
from pathlib import Path
from typing import List, Tuple

# ============================================================================
# FINITE FIELDS
# ============================================================================

# Largest field order accepted by make_field (lookup-table arithmetic)
MAX_FIELD_SIZE: int = 2 ** 20

# ============================================================================
# DISTANCE SEARCH
# ============================================================================

# Work budget for the column-dependence search, in elementary column checks
DEFAULT_DISTANCE_BUDGET: int = 10 ** 8

# Budget used when table reproduction is asked to verify exact distances
TABLE_VERIFY_BUDGET: int = 10 ** 7

# Only rows up to this length are verified exactly during table reproduction
TABLE_VERIFY_MAX_LENGTH: int = 64

# ============================================================================
# BRUTE FORCE ORACLE
# ============================================================================

# Maximum number of codewords the exhaustive enumerators will visit
BRUTE_FORCE_MAX_CODEWORDS: int = 10 ** 7

# Codewords materialized per numpy batch during enumeration
ENUMERATION_CHUNK: int = 1 << 16

# ============================================================================
# BOUNDS
# ============================================================================

# Harmonic-number constant of the GV-beating interval, as (numerator, denominator)
GV_HARMONIC_CONSTANT: Tuple[int, int] = (7, 10)

# ============================================================================
# CATALOG
# ============================================================================

# Bundled golden files for the reference tables
GOLDEN_DIR: Path = Path(__file__).resolve().parent.parent / "data" / "golden"

# Code tables in numeric order, followed by the range tables
CODE_TABLES: List[str] = ["1", "2", "3", "4", "5"]
RANGE_TABLES: List[str] = ["ranges", "ranges2"]

# Fixed CSV column order for emitted records
CSV_COLUMNS: List[str] = [
    "q", "lambda", "m", "sizes", "t", "n", "k",
    "d_bound", "d_exact", "method", "singleton", "qgv",
]

# Integers above this are emitted as decimal strings in JSON
JSON_SAFE_INTEGER: int = 2 ** 53

# ============================================================================
# PARALLELISM
# ============================================================================

# Worker threads for sweeps and table reproduction
DEFAULT_THREADS: int = os.cpu_count() or 1

# ============================================================================
# LOGGING CONFIGURATION
# ============================================================================

# Log format with timestamp
LOG_FORMAT: str = "[%(asctime)s] %(levelname)s %(name)s: %(message)s"

# Timestamp format
LOG_DATE_FORMAT: str = "%Y-%m-%d %H:%M:%S"

# Default log level
LOG_LEVEL: str = "INFO"
