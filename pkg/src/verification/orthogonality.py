"""
Hermitian self-orthogonality checks.

Two independent views of the same property:
- the Gram matrix G * conj(G)^T computed in GF(q^2), and
- the number-theoretic predicate on first exponents, which is sufficient
  (not necessary) for two twisted monomial evaluations to be orthogonal.
"""

import logging
from typing import Optional

import numpy as np

from ..algebra.field import field_of
from ..codes.models import GeneratorMatrix
from ..errors import ParameterError
from .models import OrthogonalityReport

logger = logging.getLogger(__name__)


def monomials_orthogonal(e1: int, e1p: int, q: int) -> bool:
    """
    Sufficient condition for ev_v(X^e) and ev_v(X^e') to be Hermitian-orthogonal
    under the canonical twist, in terms of the first coordinates only.

    True iff e1 = e1' (mod q+1) or e1 != e1' (mod (q+1)/2).
    """
    if e1 < 0 or e1p < 0:
        raise ParameterError(f"exponents must be nonnegative, got {e1}, {e1p}")
    if (e1 - e1p) % (q + 1) == 0:
        return True
    return (e1 - e1p) % ((q + 1) // 2) != 0


def check_self_orthogonal(gm: GeneratorMatrix, q: Optional[int] = None) -> OrthogonalityReport:
    """
    All pairwise Hermitian products of the rows of a generator matrix.

    Args:
        gm: Generator matrix over GF(q^2)
        q: Defaults to the q of the matrix's field

    Returns:
        OrthogonalityReport; for Delta inside E0 with the canonical twist
        gram_is_zero is guaranteed
    """
    matrix = gm.matrix
    q = q if q is not None else field_of(matrix).q

    gram = matrix @ (matrix ** q).T
    nonzero = gram.view(np.ndarray) != 0
    members = gm.exponents.members

    offending = []
    unguaranteed = []
    for i in range(len(members)):
        for j in range(i, len(members)):
            pair = (members[i], members[j])
            if nonzero[i, j] or nonzero[j, i]:
                offending.append(pair)
            if not monomials_orthogonal(members[i][0], members[j][0], q):
                unguaranteed.append(pair)

    report = OrthogonalityReport(
        gram_is_zero=not nonzero.any(),
        predicate_all_pairs=not unguaranteed,
        offending_pairs=offending,
        unguaranteed_pairs=unguaranteed,
        rows=len(members),
    )
    logger.debug(str(report))
    return report
