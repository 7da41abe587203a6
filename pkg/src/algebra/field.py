"""
Exact arithmetic in GF(p^k).

Fields are built once per (p, k) with a canonical modulus so that every
table, twist vector and generator matrix derived from them is reproducible.
Vector and matrix work is delegated to ``galois`` field arrays; scalar
arithmetic goes through the exp/log tables kept on the FieldSpec.

Mathematical Background:
    GF(p^k) = GF(p)[X] / (f) for a monic irreducible f of degree k. When f is
    primitive the residue g of X generates the multiplicative group, so every
    nonzero element is g^i for a unique 0 <= i < p^k - 1 and multiplication
    becomes addition of discrete logs modulo p^k - 1.

    On GF(q^2) the Frobenius map x -> x^q is an involutive automorphism fixing
    exactly GF(q). It plays the role of complex conjugation in the Hermitian
    inner product.
"""

import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Dict, FrozenSet, Iterable, List, Optional, Tuple, Type, TypeVar

import galois
import numpy as np
import sympy

from ..config import MAX_FIELD_SIZE
from ..errors import (
    FieldArithmeticError,
    FieldConstructionError,
    InvariantViolation,
    ParameterError,
)

logger = logging.getLogger(__name__)

T = TypeVar("T")

# galois field class -> the FieldSpec that built it
_FIELD_SPECS: Dict[type, "FieldSpec"] = {}


@dataclass(frozen=True)
class FieldSpec:
    """
    A finite field GF(p^k) with a fixed representation.

    Attributes:
        p: Characteristic (prime)
        k: Extension degree over GF(p)
        modulus: Monic modulus coefficients, leading coefficient first, constant term last
        generator: Integer representation of the primitive element (the residue of X when k >= 2)
        galois_field: The ``galois.FieldArray`` subclass used for vector arithmetic
        exp_table: exp_table[i] is the integer representation of generator^i
        log_table: log_table[x] is the discrete log of x, or -1 for zero

    Immutable after construction and safe to share between threads.
    """

    p: int
    k: int
    modulus: Tuple[int, ...]
    generator: int
    galois_field: Type[galois.FieldArray] = field(compare=False, repr=False)
    exp_table: np.ndarray = field(compare=False, repr=False)
    log_table: np.ndarray = field(compare=False, repr=False)

    @property
    def size(self) -> int:
        """Number of field elements, p^k."""
        return self.p ** self.k

    @property
    def group_order(self) -> int:
        """Order of the multiplicative group, p^k - 1."""
        return self.size - 1

    @property
    def is_quadratic(self) -> bool:
        """True when the field is GF(q^2) for q = p^(k/2)."""
        return self.k % 2 == 0

    @property
    def q(self) -> int:
        """The q of GF(q^2). Raises unless k is even."""
        if not self.is_quadratic:
            raise FieldArithmeticError(
                f"GF({self.p}^{self.k}) is not a quadratic extension GF(q^2)"
            )
        return self.p ** (self.k // 2)

    def element(self, index: int) -> "FieldElement":
        """Element with the given integer representation."""
        return FieldElement(self, int(index))

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def from_log(self, exponent: int) -> "FieldElement":
        """generator^exponent; any integer exponent, reduced modulo the group order."""
        return FieldElement(self, int(self.exp_table[exponent % self.group_order]))

    def array(self, values: Iterable[int]) -> galois.FieldArray:
        """Field array from integer representations."""
        return self.galois_field(np.asarray(values, dtype=np.int64))

    def from_logs(self, exponents: np.ndarray) -> galois.FieldArray:
        """Vectorized generator^e for an integer array of exponents."""
        reduced = np.mod(np.asarray(exponents, dtype=np.int64), self.group_order)
        return self.galois_field(self.exp_table[reduced])

    def logs_of(self, values: galois.FieldArray) -> np.ndarray:
        """Discrete logs of a field array; zero entries map to -1."""
        return self.log_table[np.asarray(values.view(np.ndarray), dtype=np.int64)]

    def generator_order(self) -> int:
        """Multiplicative order of the generator, computed by galois."""
        element = self.galois_field(self.generator)
        return int(on_galois_thread(element.multiplicative_order))

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON serialization."""
        return {
            "p": self.p,
            "k": self.k,
            "size": self.size,
            "modulus": list(self.modulus),
            "generator": self.generator,
        }

    def __str__(self) -> str:
        return f"GF({self.p}^{self.k}) mod {list(self.modulus)}"


@dataclass(frozen=True)
class FieldElement:
    """
    A single element of a FieldSpec.

    Attributes:
        spec: Owning field
        index: Integer representation in [0, p^k); zero is the reserved index 0
    """

    spec: FieldSpec
    index: int

    def __post_init__(self) -> None:
        if not 0 <= self.index < self.spec.size:
            raise FieldArithmeticError(
                f"index {self.index} outside [0, {self.spec.size}) for {self.spec}"
            )

    @property
    def is_zero(self) -> bool:
        return self.index == 0

    @property
    def log(self) -> Optional[int]:
        """Discrete log to the generator, or None for zero."""
        if self.is_zero:
            return None
        return int(self.spec.log_table[self.index])

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return add(self, other)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return add(self, neg(other))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return mul(self, other)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return mul(self, inv(other))

    def __neg__(self) -> "FieldElement":
        return neg(self)

    def __pow__(self, exponent: int) -> "FieldElement":
        return power(self, exponent)

    def __int__(self) -> int:
        return self.index

    def __str__(self) -> str:
        return "0" if self.is_zero else f"g^{self.log}"


# ============================================================================
# FIELD CONSTRUCTION
# ============================================================================

# galois opens its sqlite lookup databases on first use and serves them only
# to the opening thread, so every galois call that may consult them
# (primitive_polys, field verification, multiplicative_order) runs here.
_GALOIS_THREAD = ThreadPoolExecutor(max_workers=1, thread_name_prefix="galois")

# (p, k) -> FieldSpec
_FIELDS: Dict[Tuple[int, int], "FieldSpec"] = {}
_FIELD_LOCK = threading.Lock()


def on_galois_thread(func: Callable[..., T], *args: Any) -> T:
    """Run func(*args) on the thread that owns galois' databases and wait for it."""
    return _GALOIS_THREAD.submit(func, *args).result()


@lru_cache(maxsize=None)
def prime_power_parts(n: int) -> Optional[Tuple[int, int]]:
    """(p, e) with n = p^e, or None when n is not a prime power."""
    if n < 2:
        return None
    factors = sympy.factorint(n)
    if len(factors) != 1:
        return None
    (p, e), = factors.items()
    return int(p), int(e)


def check_odd_prime_power(q: int) -> Tuple[int, int]:
    """
    Split an odd prime power q into (p, e).

    Raises:
        ParameterError: q even, or not a prime power
    """
    if q % 2 == 0:
        raise ParameterError("q must be odd")
    parts = prime_power_parts(q)
    if parts is None:
        raise ParameterError(f"q={q} is not a prime power")
    return parts


def _construct_field(p: int, k: int) -> FieldSpec:
    if k < 1:
        raise FieldConstructionError(f"extension degree must be >= 1, got {k}")
    if p < 2 or not galois.is_prime(p):
        raise FieldConstructionError(f"p={p} is not prime")

    size = p ** k
    if size > MAX_FIELD_SIZE:
        raise FieldConstructionError(
            f"GF({p}^{k}) has {size} elements, above the limit of {MAX_FIELD_SIZE}"
        )

    # galois enumerates primitive polynomials in lexicographic order
    poly = next(galois.primitive_polys(p, k))
    modulus = tuple(int(c) for c in poly.coeffs)

    if k == 1:
        generator = (-modulus[-1]) % p
        gf = galois.GF(p, primitive_element=generator)
    else:
        generator = p  # integer representation of X
        gf = galois.GF(size, irreducible_poly=poly, primitive_element=generator)

    exp_table = np.asarray(
        (gf.primitive_element ** np.arange(size - 1)).view(np.ndarray), dtype=np.int64
    )
    if len(np.unique(exp_table)) != size - 1:
        raise InvariantViolation(f"generator {generator} is not primitive in GF({p}^{k})")

    log_table = np.full(size, -1, dtype=np.int64)
    log_table[exp_table] = np.arange(size - 1, dtype=np.int64)

    return FieldSpec(
        p=p,
        k=k,
        modulus=modulus,
        generator=int(generator),
        galois_field=gf,
        exp_table=exp_table,
        log_table=log_table,
    )


def build_field(p: int, k: int) -> FieldSpec:
    """
    Construct GF(p^k) from scratch, bypassing the cache.

    The result is not registered with field_of; use make_field for fields
    whose arrays flow through the rest of the package.
    """
    return on_galois_thread(_construct_field, p, k)


def make_field(p: int, k: int) -> FieldSpec:
    """
    Build the canonical GF(p^k), once per (p, k).

    The modulus is the lexicographically first monic primitive polynomial of
    degree k over GF(p) (coefficients compared leading term first, constant
    term last), so the residue of X is a primitive element. For k = 1 that
    polynomial is X + c and the generator is -c.

    Safe to call from any thread; concurrent first calls build the field once.

    Args:
        p: Prime characteristic
        k: Extension degree, k >= 1

    Returns:
        FieldSpec with exp/log tables built

    Raises:
        FieldConstructionError: p not prime, k < 1, or p^k above MAX_FIELD_SIZE
    """
    with _FIELD_LOCK:
        spec = _FIELDS.get((p, k))
        if spec is None:
            spec = build_field(p, k)
            _FIELDS[(p, k)] = spec
            _FIELD_SPECS[spec.galois_field] = spec
            logger.debug(f"Built {spec} with generator {spec.generator}")
        return spec


def field_of(values: galois.FieldArray) -> FieldSpec:
    """FieldSpec that owns a galois array built by this module."""
    try:
        return _FIELD_SPECS[type(values)]
    except KeyError:
        raise FieldArithmeticError(
            f"{type(values).__name__} was not built by make_field"
        ) from None


# ============================================================================
# SCALAR ARITHMETIC
# ============================================================================

def _same_field(a: FieldElement, b: FieldElement) -> FieldSpec:
    if a.spec != b.spec:
        raise FieldArithmeticError(f"mixed-field operands: {a.spec} and {b.spec}")
    return a.spec


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    spec = _same_field(a, b)
    gf = spec.galois_field
    return FieldElement(spec, int(gf(a.index) + gf(b.index)))


def neg(a: FieldElement) -> FieldElement:
    gf = a.spec.galois_field
    return FieldElement(a.spec, int(-gf(a.index)))


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    spec = _same_field(a, b)
    if a.is_zero or b.is_zero:
        return spec.zero()
    return spec.from_log(a.log + b.log)


def inv(a: FieldElement) -> FieldElement:
    if a.is_zero:
        raise FieldArithmeticError("inverse of zero")
    return a.spec.from_log(-a.log)


def power(a: FieldElement, exponent: int) -> FieldElement:
    """a^exponent for a nonnegative integer exponent (0^0 = 1)."""
    if exponent < 0:
        raise ParameterError(f"exponent must be nonnegative, got {exponent}")
    if exponent == 0:
        return a.spec.one()
    if a.is_zero:
        return a.spec.zero()
    return a.spec.from_log(a.log * exponent)


def conj(a: FieldElement) -> FieldElement:
    """Frobenius conjugate a^q on GF(q^2)."""
    return power(a, a.spec.q)


# ============================================================================
# DISTINGUISHED ELEMENTS
# ============================================================================

def root_of_unity(spec: FieldSpec, t: int) -> FieldElement:
    """
    Canonical primitive t-th root of unity, generator^((p^k - 1) / t).

    Raises:
        ParameterError: t is not a positive divisor of p^k - 1
    """
    if t < 1 or spec.group_order % t != 0:
        raise ParameterError(f"t={t} does not divide {spec.group_order}")
    return spec.from_log(spec.group_order // t)


def solve_qplus1_power_eq_minus_one(spec: FieldSpec) -> FrozenSet[FieldElement]:
    """
    All x in GF(q^2) with x^(q+1) = -1.

    For odd q the map x -> x^(q+1) is the norm onto GF(q)*, so each value
    has exactly q+1 preimages; generator^((q-1)/2) is one of them.
    """
    q = spec.q
    if q % 2 == 0:
        raise ParameterError(f"q must be odd, got q={q}")

    gf = spec.galois_field
    nonzero = gf.elements[1:]
    hits = nonzero[nonzero ** (q + 1) == -gf(1)]

    solutions = frozenset(FieldElement(spec, int(x)) for x in hits.view(np.ndarray))
    if len(solutions) != q + 1:
        raise InvariantViolation(
            f"x^(q+1) = -1 has {len(solutions)} solutions in {spec}, expected {q + 1}"
        )
    return solutions


def element_logs(values: galois.FieldArray) -> List[Optional[int]]:
    """Flat list of discrete logs, None for zero (JSON symbol form)."""
    spec = field_of(values)
    return [None if x < 0 else int(x) for x in spec.logs_of(values).ravel()]
