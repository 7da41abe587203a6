"""
Result models for quantum code bounds.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class SingletonClassification:
    """
    Position of [[n, k, d]] relative to the quantum Singleton bound n >= k + 2d - 2.

    Attributes:
        defect: n - (k + 2d - 2)
        label: "MDS" (defect 0), "QHAMDS" (defect 2) or "defect(s)"
    """

    defect: int
    label: str

    def to_dict(self) -> dict:
        return {"defect": self.defect, "label": self.label}

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class QgvVerdict:
    """
    Exact evaluation of the quantum Gilbert-Varshamov inequality

        (q^(n-k+2) - 1) / (q^2 - 1)  >=  sum_{i=1}^{d-1} (q^2 - 1)^(i-1) C(n, i).

    The bound is beaten when the inequality fails.

    Attributes:
        n, k, d, q: Code parameters
        lhs: Left-hand side, floored when the division is inexact
        rhs: Right-hand side
        beaten: lhs < rhs, decided exactly by cross-multiplication
        preconditions_met: n > k >= 2, d >= 2 and n = k (mod 2)
        lhs_is_exact: Whether q^2 - 1 divides q^(n-k+2) - 1
    """

    n: int
    k: int
    d: int
    q: int
    lhs: int
    rhs: int
    beaten: bool
    preconditions_met: bool
    lhs_is_exact: bool = True

    def to_dict(self) -> dict:
        """JSON form; lhs and rhs as exact decimal strings."""
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "q": self.q,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "beaten": self.beaten,
            "preconditions_met": self.preconditions_met,
            "lhs_is_exact": self.lhs_is_exact,
        }

    def __str__(self) -> str:
        verdict = "beaten" if self.beaten else "not beaten"
        return f"QGV [[{self.n},{self.k},{self.d}]]_{self.q}: {verdict}"


@dataclass(frozen=True)
class GvInterval:
    """
    Lengths n in [n_low, n_high] for which m = 2 codes with distance d beat QGV.

    Attributes:
        q: Field parameter
        d: Designed distance
        n_low: Smallest even integer at or above the closed-form lower endpoint
        n_high: (q^2 - 1)^2, the largest m = 2 length
    """

    q: int
    d: int
    n_low: int
    n_high: int

    def to_dict(self) -> dict:
        return {"q": self.q, "d": self.d, "n_low": self.n_low, "n_high": self.n_high}

    def __str__(self) -> str:
        return f"{self.n_low}-{self.n_high}"
