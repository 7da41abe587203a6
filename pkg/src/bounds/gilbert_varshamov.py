"""
Quantum Gilbert-Varshamov bound.

All comparisons use exact integers. The closed-form interval endpoint
involves a logarithm and is rounded with sympy, which raises working
precision until the integer ceiling is unambiguous.

Mathematical Background:
    For m = 2 codes with distance d the quantity n - k = 2 #Delta_d does not
    depend on n, so the left side of the inequality is constant while the
    right side grows with n. The bound is therefore beaten from some length
    onwards: for d = 3 the flip solves a quadratic, for d >= 5 a harmonic-sum
    estimate gives a sufficient interval, and in general a scan over lengths
    locates it.
"""

import logging
from typing import Callable, List, Optional

import sympy
from scipy.special import comb

from ..algebra.field import check_odd_prime_power
from ..algebra.lattice import delta_size_closed_form
from ..config import GV_HARMONIC_CONSTANT
from ..errors import ParameterError
from .models import GvInterval, QgvVerdict

logger = logging.getLogger(__name__)

# Digits used when sympy cannot decide the ceiling symbolically
_EVAL_DIGITS = 60

LENGTHS_ALL = "all"
LENGTHS_ADMISSIBLE = "admissible"


def qgv_rhs(n: int, d: int, q: int) -> int:
    """sum_{i=1}^{d-1} (q^2 - 1)^(i-1) C(n, i), term by term."""
    base = q * q - 1
    return sum(base ** (i - 1) * comb(n, i, exact=True) for i in range(1, d))


def qgv_rhs_incremental(n: int, d: int, q: int) -> int:
    """Same sum, carrying C(n, i) and (q^2 - 1)^(i-1) from one term to the next."""
    base = q * q - 1
    total, binomial, weight = 0, 1, 1
    for i in range(1, d):
        binomial = binomial * (n - i + 1) // i
        total += weight * binomial
        weight *= base
    return total


def qgv(n: int, k: int, d: int, q: int) -> QgvVerdict:
    """
    Decide whether [[n, k, d]]_q beats the quantum GV bound.

    The inequality is evaluated whatever the preconditions; whether they hold
    is reported separately.

    Raises:
        ParameterError: Non-positive n, k outside [0, n], d < 1, or q not an odd prime power
    """
    if n <= 0 or not 0 <= k <= n or d < 1:
        raise ParameterError(f"invalid QGV parameters n={n}, k={k}, d={d}, q={q}")
    check_odd_prime_power(q)

    numerator = q ** (n - k + 2) - 1
    denominator = q * q - 1
    lhs, remainder = divmod(numerator, denominator)
    rhs = qgv_rhs(n, d, q)

    return QgvVerdict(
        n=n,
        k=k,
        d=d,
        q=q,
        lhs=lhs,
        rhs=rhs,
        beaten=numerator < rhs * denominator,
        preconditions_met=(n > k >= 2 and d >= 2 and (n - k) % 2 == 0),
        lhs_is_exact=(remainder == 0),
    )


def qgv_threshold_d3(q: int) -> int:
    """
    Smallest n with n > (q^2 - 3 + sqrt(8q^8 + q^4 - 6q^2 + 1)) / (2(q^2 - 1)).

    Beyond this length every m = 2, d = 3 code beats the bound. The square
    root is bracketed with an exact integer root, never a float.
    """
    check_odd_prime_power(q)
    square = q * q
    discriminant = 8 * q ** 8 + q ** 4 - 6 * q ** 2 + 1
    root, _ = sympy.integer_nthroot(discriminant, 2)

    def exceeds(n: int) -> bool:
        gap = 2 * (square - 1) * n - (square - 3)
        return gap > 0 and gap * gap > discriminant

    n = max(1, (square - 3 + int(root)) // (2 * (square - 1)))
    while not exceeds(n):
        n += 1
    return n


def gv_interval(q: int, d: int) -> Optional[GvInterval]:
    """
    Closed-form range of m = 2 lengths that beat QGV at distance d.

    The lower endpoint is the smallest even integer at or above
    (d-1) * q^(2/(d-1)) / (q^2 - 1) * q^(2(0.7 + ln(d-1))); every admissible
    length lambda(q+1)a_2 is even. The upper endpoint is (q^2 - 1)^2.

    Returns:
        GvInterval, or None when the range is empty

    Raises:
        ParameterError: q not an odd prime power, or d outside [5, (q+3)/2]
    """
    check_odd_prime_power(q)
    if d < 5 or 2 * d > q + 3:
        raise ParameterError(f"d={d} outside [5, (q+3)/2] for q={q}")

    num, den = GV_HARMONIC_CONSTANT
    harmonic = sympy.Rational(num, den) + sympy.log(d - 1)
    base = sympy.Integer(q)
    expression = (d - 1) * base ** sympy.Rational(2, d - 1) / (q * q - 1) * base ** (2 * harmonic)

    ceiling = sympy.ceiling(expression)
    if not ceiling.is_Integer:
        ceiling = sympy.ceiling(expression.evalf(_EVAL_DIGITS))
    n_low = int(ceiling)
    n_low += n_low % 2
    n_high = (q * q - 1) ** 2

    logger.debug(f"gv_interval(q={q}, d={d}): lower expression ~ {float(expression):.2f}")
    if n_low > n_high:
        return None
    return GvInterval(q=q, d=d, n_low=n_low, n_high=n_high)


def admissible_lengths(q: int, m: int = 2) -> List[int]:
    """
    Sorted distinct code lengths lambda(q+1) * a_2 for lambda | q-1, 2 <= a_2 <= q^2-1.

    m = 1 gives the lengths lambda(q+1).
    """
    check_odd_prime_power(q)
    lambdas = [lam for lam in range(1, q) if (q - 1) % lam == 0]
    firsts = [lam * (q + 1) for lam in lambdas]
    if m == 1:
        return sorted(set(firsts))
    if m == 2:
        return sorted({a1 * a2 for a1 in firsts for a2 in range(2, q * q)})
    raise ParameterError(f"admissible lengths are tabulated for m in (1, 2), got m={m}")


def qgv_scan_threshold(
    q: int,
    d: int,
    k_of_n: Optional[Callable[[int], int]] = None,
    lengths: str = LENGTHS_ADMISSIBLE,
) -> Optional[int]:
    """
    Smallest candidate length from which QGV stays beaten up to (q^2 - 1)^2.

    Every candidate in range is evaluated, so the returned length is beaten
    and so is every larger candidate.

    Args:
        q: Field parameter
        d: Distance, d >= 3
        k_of_n: Dimension as a function of length; defaults to n - 2 #Delta_d for m = 2
        lengths: "admissible" scans m = 2 code lengths only; "all" scans every integer

    Returns:
        The threshold length, or None if the largest candidate is not beaten
    """
    check_odd_prime_power(q)
    if d < 3:
        raise ParameterError(f"d must be >= 3, got {d}")
    if k_of_n is None:
        size = delta_size_closed_form(2, d)

        def k_of_n(n: int) -> int:
            return n - 2 * size

    n_high = (q * q - 1) ** 2
    if lengths == LENGTHS_ADMISSIBLE:
        candidates = admissible_lengths(q, 2)
    elif lengths == LENGTHS_ALL:
        candidates = range(1, n_high + 1)
    else:
        raise ParameterError(f"unknown length set {lengths!r}")

    threshold = None
    for n in candidates:
        k = k_of_n(n)
        if k < 0 or k > n:
            continue
        if qgv(n, k, d, q).beaten:
            if threshold is None:
                threshold = n
        else:
            threshold = None

    logger.info(f"QGV scan q={q}, d={d} ({lengths} lengths): threshold {threshold}")
    return threshold
