"""
Result models for the verification engines.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ..algebra.lattice import Exponent

ExponentPair = Tuple[Exponent, Exponent]

METHOD_COLUMNS = "column-dependence"
METHOD_BRUTE_FORCE = "brute-force"
METHOD_FOOTPRINT = "footprint-only"


@dataclass
class OrthogonalityReport:
    """
    Hermitian self-orthogonality of a generator matrix.

    Attributes:
        gram_is_zero: Every Hermitian product of two rows vanishes
        predicate_all_pairs: The first-coordinate orthogonality predicate holds for every row pair
        offending_pairs: Row pairs (e, e') with i <= j whose Hermitian product is nonzero;
            empty exactly when gram_is_zero
        unguaranteed_pairs: Row pairs for which the predicate gives no guarantee
        rows: Number of rows checked
    """

    gram_is_zero: bool
    predicate_all_pairs: bool
    offending_pairs: List[ExponentPair] = field(default_factory=list)
    unguaranteed_pairs: List[ExponentPair] = field(default_factory=list)
    rows: int = 0

    def to_dict(self) -> dict:
        return {
            "gram_is_zero": self.gram_is_zero,
            "predicate_all_pairs": self.predicate_all_pairs,
            "offending_pairs": [[list(e), list(f)] for e, f in self.offending_pairs],
            "unguaranteed_pairs": [[list(e), list(f)] for e, f in self.unguaranteed_pairs],
            "rows": self.rows,
        }

    def __str__(self) -> str:
        status = "self-orthogonal" if self.gram_is_zero else f"{len(self.offending_pairs)} offending pairs"
        return f"Gram {self.rows}x{self.rows}: {status}"


@dataclass
class DistanceResult:
    """
    Minimum distance of a (dual) code.

    Attributes:
        value: Exact distance when exact is True, otherwise a certified lower bound
        exact: Whether value is the true minimum distance
        method: One of column-dependence, brute-force, footprint-only
        work: Elementary checks performed (columns inspected, or codewords enumerated)
        witness: Column indices of the lex-least minimal dependent set, when found
    """

    value: int
    exact: bool
    method: str
    work: int = 0
    witness: Optional[Tuple[int, ...]] = None

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "exact": self.exact,
            "method": self.method,
            "work": self.work,
            "witness": list(self.witness) if self.witness is not None else None,
        }

    def __str__(self) -> str:
        relation = "=" if self.exact else ">="
        return f"d {relation} {self.value} ({self.method}, work={self.work:,})"
