"""
Catalog data models: quantum code records, sweep specifications and
table-reproduction reports.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from ..config import JSON_SAFE_INTEGER

FILTER_MDS = "mds"
FILTER_QHAMDS = "qhamds"
FILTER_QGV = "qgv"
FILTERS = (FILTER_MDS, FILTER_QHAMDS, FILTER_QGV)


def _json_int(value: Optional[int]) -> Any:
    """Integers beyond the exactly representable JSON range become decimal strings."""
    if value is not None and abs(value) > JSON_SAFE_INTEGER:
        return str(value)
    return value


def _from_json_int(value: Any) -> Optional[int]:
    return None if value is None else int(value)


@dataclass(frozen=True)
class QuantumCodeRecord:
    """
    Parameters of one stabilizer code [[n, k, >= t]]_q built from Delta_t.

    Attributes:
        q: Field parameter (code over GF(q^2), quantum code over q-ary qudits)
        lam: lambda, with a_1 = lam * (q + 1)
        m: Number of variables
        sizes: (a_1, ..., a_m)
        t: Designed distance
        n: Length, prod sizes
        k: n - 2 #Delta_t
        d_bound: Certified lower bound on d (t)
        d_exact: Exact distance when verified, else None
        method: How the distance was obtained (column-dependence, brute-force, footprint-only)
        singleton: Singleton label at d_exact when known, else at t
        singleton_defect: n - (k + 2d - 2) at the same d
        qgv_beaten: Whether the parameters beat the quantum GV bound
        construction: Canonical parameter string

    Example:
        >>> str(record)
        '[[12,8,3]]_5 MDS QGV:yes gmcc(q=5,lambda=2,sizes=12,t=3)'
    """

    q: int
    lam: int
    m: int
    sizes: Tuple[int, ...]
    t: int
    n: int
    k: int
    d_bound: int
    d_exact: Optional[int]
    method: str
    singleton: str
    singleton_defect: int
    qgv_beaten: bool
    construction: str

    @property
    def d(self) -> int:
        return self.d_exact if self.d_exact is not None else self.d_bound

    @property
    def sizes_text(self) -> str:
        return ";".join(str(a) for a in self.sizes)

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON serialization."""
        return {
            "q": _json_int(self.q),
            "lambda": _json_int(self.lam),
            "m": self.m,
            "sizes": [_json_int(a) for a in self.sizes],
            "t": self.t,
            "n": _json_int(self.n),
            "k": _json_int(self.k),
            "d_bound": self.d_bound,
            "d_exact": self.d_exact,
            "method": self.method,
            "singleton": self.singleton,
            "singleton_defect": _json_int(self.singleton_defect),
            "qgv_beaten": self.qgv_beaten,
            "construction": self.construction,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "QuantumCodeRecord":
        return cls(
            q=int(data["q"]),
            lam=int(data["lambda"]),
            m=int(data["m"]),
            sizes=tuple(int(a) for a in data["sizes"]),
            t=int(data["t"]),
            n=int(data["n"]),
            k=int(data["k"]),
            d_bound=int(data["d_bound"]),
            d_exact=_from_json_int(data.get("d_exact")),
            method=data["method"],
            singleton=data["singleton"],
            singleton_defect=int(data["singleton_defect"]),
            qgv_beaten=bool(data["qgv_beaten"]),
            construction=data["construction"],
        )

    def to_row(self) -> Dict[str, Any]:
        """Row keyed by the fixed CSV columns."""
        return {
            "q": self.q,
            "lambda": self.lam,
            "m": self.m,
            "sizes": self.sizes_text,
            "t": self.t,
            "n": self.n,
            "k": self.k,
            "d_bound": self.d_bound,
            "d_exact": "" if self.d_exact is None else self.d_exact,
            "method": self.method,
            "singleton": self.singleton,
            "qgv": "yes" if self.qgv_beaten else "no",
        }

    def __str__(self) -> str:
        distance = str(self.d_exact) if self.d_exact is not None else f">={self.d_bound}"
        qgv = "yes" if self.qgv_beaten else "no"
        return f"[[{self.n},{self.k},{distance}]]_{self.q} {self.singleton} QGV:{qgv} {self.construction}"


@dataclass(frozen=True)
class SweepSpec:
    """
    Parameter ranges for a sweep.

    Attributes:
        q_values: Field parameters to visit (odd prime powers)
        lambdas: Allowed lambda values; None means every divisor of q - 1
        m_values: Numbers of variables
        a_range: Inclusive range for every a_j, j >= 2 (clipped to [2, q^2 - 1])
        t_values: Designed distances; None means every 2 <= t <= (q+3)/2
        filters: Subset of {"mds", "qhamds", "qgv"}; a record must pass all of them
        n_max: Skip tuples longer than this
        verify_budget: Column-search budget for exact distances; None disables verification
        verify_max_length: Only verify codes up to this length
        check_orthogonality: Build the Gram matrix of every code
    """

    q_values: Tuple[int, ...]
    lambdas: Optional[Tuple[int, ...]] = None
    m_values: Tuple[int, ...] = (1, 2)
    a_range: Tuple[int, int] = (2, 8)
    t_values: Optional[Tuple[int, ...]] = None
    filters: FrozenSet[str] = frozenset()
    n_max: Optional[int] = None
    verify_budget: Optional[int] = None
    verify_max_length: int = 64
    check_orthogonality: bool = True


@dataclass(frozen=True)
class RowDiff:
    """One mismatching field of a reproduced table row."""

    table: str
    row: int
    column: str
    expected: Any
    actual: Any

    def to_dict(self) -> dict:
        return {
            "table": self.table,
            "row": self.row,
            "column": self.column,
            "expected": self.expected,
            "actual": self.actual,
        }

    def __str__(self) -> str:
        return f"table {self.table} row {self.row}: {self.column} expected {self.expected!r}, got {self.actual!r}"


@dataclass
class TableReport:
    """
    Reproduction of one golden table.

    Attributes:
        table: Table name ("1".."5", "ranges", "ranges2")
        rows: Reproduced rows as dictionaries
        diffs: Field-level mismatches against the golden file
    """

    table: str
    rows: List[Dict[str, Any]] = field(default_factory=list)
    diffs: List[RowDiff] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.diffs

    def to_dict(self) -> dict:
        return {
            "table": self.table,
            "rows": self.rows,
            "diffs": [d.to_dict() for d in self.diffs],
        }
