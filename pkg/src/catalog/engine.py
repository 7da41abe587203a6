"""
Catalog Engine - Orchestrator for parameter sweeps.

Enumerates admissible (q, lambda, m, sizes, t) tuples, builds one
QuantumCodeRecord per tuple on a thread pool, and caches records by their
canonical construction string.
"""

import itertools
import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from ..algebra.field import check_odd_prime_power, make_field
from ..codes.models import CodeParams
from ..config import DEFAULT_THREADS
from ..errors import ParameterError
from ..verification.quantum import quantum_params
from .models import FILTER_MDS, FILTER_QGV, FILTER_QHAMDS, FILTERS, QuantumCodeRecord, SweepSpec

logger = logging.getLogger(__name__)

# (q, lambda, (a_2, ..., a_m), t)
SweepTuple = Tuple[int, int, Tuple[int, ...], int]


def warm_fields(q_values: Iterable[int]) -> None:
    """
    Validate each q and build GF(q^2) in the calling thread.

    Pool workers then only read fields that already exist.

    Raises:
        ParameterError: q not an odd prime power
    """
    for q in q_values:
        p, e = check_odd_prime_power(q)
        make_field(p, 2 * e)


class CatalogEngine:
    """
    Centralized record builder.

    Coordinates code construction, verification and bound evaluation and
    provides:
    - Deterministic sweeps ordered by (q, lambda, m, sizes, t), never by completion time
    - A record cache keyed by construction string and verification settings
    - Thread-pool parallelism over parameter tuples
    """

    def __init__(self, threads: int = DEFAULT_THREADS):
        """
        Initialize catalog engine.

        Args:
            threads: Worker threads used by sweep and table reproduction
        """
        self.threads = max(1, int(threads))

        # Cache storage: {cache_key: record}
        self._cache: Dict[str, QuantumCodeRecord] = {}
        self._lock = threading.Lock()

        logger.debug(f"Catalog engine initialized with {self.threads} threads")

    def _get_cache_key(self, category: str, *args) -> str:
        """Generate cache key from category and arguments."""
        return f"{category}:{'_'.join(str(arg) for arg in args)}"

    def record(
        self,
        q: int,
        lam: int,
        sizes_tail: Tuple[int, ...],
        t: int,
        verify_budget: Optional[int] = None,
        check_orthogonality: bool = True,
    ) -> QuantumCodeRecord:
        """
        Build (or fetch from cache) the record for one parameter tuple.

        Args:
            q, lam, sizes_tail, t: Code parameters
            verify_budget: Column-search budget; None skips exact verification
            check_orthogonality: Compute the Gram matrix
        """
        params = CodeParams.create(q, lam, sizes_tail)
        cache_key = self._get_cache_key(
            "record", params.construction(t), verify_budget, check_orthogonality
        )

        with self._lock:
            cached = self._cache.get(cache_key)
        if cached is not None:
            logger.debug(f"Cache hit: {cache_key}")
            return cached

        record = quantum_params(
            params,
            t,
            verify_distance=verify_budget is not None,
            budget=verify_budget or 1,
            check_orthogonality=check_orthogonality,
        )
        with self._lock:
            self._cache[cache_key] = record
        return record

    def map(self, func, items: List) -> List:
        """Apply func to items on the pool, results in input order."""
        if self.threads == 1 or len(items) <= 1:
            return [func(item) for item in items]
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            return list(pool.map(func, items))

    # ------------------------------------------------------------------
    # Sweeps
    # ------------------------------------------------------------------

    @staticmethod
    def enumerate(spec: SweepSpec) -> Iterator[SweepTuple]:
        """Admissible tuples in (q, lambda, m, sizes lex, t ascending) order."""
        for q in sorted(set(spec.q_values)):
            warm_fields([q])

            divisors = [lam for lam in range(1, q) if (q - 1) % lam == 0]
            lambdas = divisors if spec.lambdas is None else [lam for lam in divisors if lam in spec.lambdas]

            t_max = (q + 3) // 2
            ts = range(2, t_max + 1) if spec.t_values is None else sorted(
                t for t in set(spec.t_values) if 2 <= t <= t_max
            )

            low = max(2, spec.a_range[0])
            high = min(q * q - 1, spec.a_range[1])

            for lam in lambdas:
                for m in sorted(set(spec.m_values)):
                    if m < 1:
                        continue
                    for tail in itertools.product(range(low, high + 1), repeat=m - 1):
                        n = lam * (q + 1)
                        for a in tail:
                            n *= a
                        if spec.n_max is not None and n > spec.n_max:
                            continue
                        for t in ts:
                            yield q, lam, tuple(tail), t

    def sweep(self, spec: SweepSpec) -> List[QuantumCodeRecord]:
        """
        Build records for every tuple of a sweep specification.

        Returns:
            Records in enumeration order, deduplicated by construction string
            and passed through the spec's filters
        """
        unknown = set(spec.filters) - set(FILTERS)
        if unknown:
            raise ParameterError(f"unknown filters: {sorted(unknown)}")

        tuples = list(self.enumerate(spec))
        logger.info(f"Sweeping {len(tuples)} parameter tuples on {self.threads} threads")

        def build(item: SweepTuple) -> QuantumCodeRecord:
            q, lam, tail, t = item
            n = lam * (q + 1)
            for a in tail:
                n *= a
            verify = spec.verify_budget is not None and n <= spec.verify_max_length
            return self.record(
                q,
                lam,
                tail,
                t,
                verify_budget=spec.verify_budget if verify else None,
                check_orthogonality=spec.check_orthogonality,
            )

        records = self.map(build, tuples)

        seen = set()
        result = []
        for record in records:
            if record.construction in seen:
                continue
            seen.add(record.construction)
            if FILTER_MDS in spec.filters and record.singleton != "MDS":
                continue
            if FILTER_QHAMDS in spec.filters and record.singleton != "QHAMDS":
                continue
            if FILTER_QGV in spec.filters and not record.qgv_beaten:
                continue
            result.append(record)

        logger.info(f"Sweep produced {len(result)} records")
        return result
