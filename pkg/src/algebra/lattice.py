"""
Exponent-set combinatorics on the box E = [0, a_1) x ... x [0, a_m).

Provides the box itself, lexicographic order, the footprint weight Dis, the
self-orthogonality region E0, the hyperbolic sets Delta_t and the dimension
recursion V_b(m, a) with its closed forms for m = 2 and m = 3.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Tuple

from ..errors import ParameterError

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class ExponentBox:
    """
    The exponent box E.

    Attributes:
        sizes: (a_1, ..., a_m); a_1 = lambda * (q + 1) when q is known
        q: Optional field parameter; when set, t-ranges and region E0 are checked against it

    Example:
        >>> ExponentBox((8, 6)).n
        48
    """

    sizes: Tuple[int, ...]
    q: Optional[int] = None

    def __post_init__(self) -> None:
        if not self.sizes:
            raise ParameterError("box needs at least one coordinate")
        if any(a < 1 for a in self.sizes):
            raise ParameterError(f"box sizes must be positive, got {self.sizes}")
        if self.q is not None and self.sizes[0] % (self.q + 1) != 0:
            raise ParameterError(
                f"a_1={self.sizes[0]} is not a multiple of q+1={self.q + 1}"
            )

    @property
    def m(self) -> int:
        return len(self.sizes)

    @property
    def n(self) -> int:
        return math.prod(self.sizes)

    def contains(self, e: Exponent) -> bool:
        return len(e) == self.m and all(0 <= x < a for x, a in zip(e, self.sizes))

    def __iter__(self) -> Iterator[Exponent]:
        """All of E in lex order (leftmost coordinate most significant)."""
        return itertools.product(*(range(a) for a in self.sizes))


@dataclass(frozen=True)
class ExponentSet:
    """
    A subset Delta of E, members strictly increasing in lex order.

    Attributes:
        box: Ambient box
        members: Lex-sorted distinct exponents
    """

    box: ExponentBox
    members: Tuple[Exponent, ...]

    def __post_init__(self) -> None:
        for e in self.members:
            if not self.box.contains(e):
                raise ParameterError(f"exponent {e} outside box {self.box.sizes}")
        for e, f in zip(self.members, self.members[1:]):
            if lex_compare(e, f) >= 0:
                raise ParameterError("members must be strictly increasing in lex order")

    @classmethod
    def from_iterable(cls, box: ExponentBox, exponents) -> "ExponentSet":
        return cls(box, tuple(sorted({tuple(e) for e in exponents})))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Exponent]:
        return iter(self.members)

    def __contains__(self, e: Exponent) -> bool:
        return tuple(e) in self.members

    def issubset(self, other: "ExponentSet") -> bool:
        return set(self.members) <= set(other.members)

    def to_dict(self) -> dict:
        return {
            "sizes": list(self.box.sizes),
            "size": len(self.members),
            "members": [list(e) for e in self.members],
        }


def lex_compare(e: Sequence[int], f: Sequence[int]) -> int:
    """-1, 0 or 1 as e <, =, > f in lex order."""
    if len(e) != len(f):
        raise ParameterError(f"dimension mismatch: {len(e)} vs {len(f)}")
    for x, y in zip(e, f):
        if x != y:
            return -1 if x < y else 1
    return 0


def dis(box: ExponentBox, e: Exponent) -> int:
    """Dis(e) = prod (a_j - e_j)."""
    if not box.contains(e):
        raise ParameterError(f"exponent {e} outside box {box.sizes}")
    return math.prod(a - x for a, x in zip(box.sizes, e))


def footprint_bound(delta: ExponentSet) -> int:
    """
    Footprint lower bound d0 = min over Delta of Dis(e) on the primal code.

    Raises:
        ParameterError: Delta is empty
    """
    if not delta.members:
        raise ParameterError("footprint bound of an empty exponent set")
    return min(dis(delta.box, e) for e in delta.members)


def build_E0(box: ExponentBox, q: int) -> ExponentSet:
    """All e in E with e_1 <= (q-1)/2."""
    if box.sizes[0] % (q + 1) != 0:
        raise ParameterError(f"a_1={box.sizes[0]} is not a multiple of q+1={q + 1}")
    limit = (q - 1) // 2
    ranges = [range(min(limit + 1, box.sizes[0]))] + [range(a) for a in box.sizes[1:]]
    return ExponentSet(box, tuple(itertools.product(*ranges)))


def check_t_range(t: int, q: Optional[int]) -> None:
    """2 <= t, and t <= (q+3)/2 when q is known."""
    if t < 2:
        raise ParameterError(f"t must be >= 2, got {t}")
    if q is not None and 2 * t > q + 3:
        raise ParameterError(f"t={t} exceeds (q+3)/2 for q={q}")


def build_Delta_t(box: ExponentBox, t: int) -> ExponentSet:
    """
    Delta_t = {e in E : prod (e_j + 1) < t}.

    Only the sub-box [0, min(t-2, a_j-1)] per coordinate can hold members, so
    the enumeration costs O(t^m). Box bounds do matter when some a_j < t-1.
    """
    check_t_range(t, box.q)
    ranges = [range(min(t - 1, a)) for a in box.sizes]
    members = tuple(
        e for e in itertools.product(*ranges) if math.prod(x + 1 for x in e) < t
    )
    return ExponentSet(box, members)


@lru_cache(maxsize=None)
def V(b: int, m: int, a: int) -> int:
    """
    V_b(m, a) = #{(l_1..l_m) : 1 <= l_j <= b, prod l_j <= a}.

    Recursion V_b(m, a) = sum_{s=1}^{b} V_b(m-1, floor(a/s)), base V_b(1, a) = min(a, b).
    """
    if b < 1 or m < 1 or a < 0:
        raise ParameterError(f"V needs b >= 1, m >= 1, a >= 0; got b={b}, m={m}, a={a}")
    if a == 0:
        return 0
    if m == 1:
        return min(a, b)
    total = 0
    for s in range(1, b + 1):
        quotient = a // s
        if quotient == 0:
            break
        total += V(b, m - 1, quotient)
    return total


def delta_size(box: ExponentBox, t: int) -> int:
    """
    #Delta_t.

    Uses V_{a_1}(m, t-1) when all box sizes are equal and direct enumeration
    otherwise.
    """
    check_t_range(t, box.q)
    if len(set(box.sizes)) == 1:
        return V(box.sizes[0], box.m, t - 1)
    return len(build_Delta_t(box, t))


def delta_size_closed_form(m: int, t: int) -> int:
    """
    #Delta_t from the displayed sums, valid when every a_j >= t-1.

    m = 1: t - 1
    m = 2: sum_{s=1}^{t-1} floor((t-1)/s)
    m = 3: sum_{s=1}^{t-1} sum_{r=1}^{floor((t-1)/s)} floor((t-1)/(s r))
    """
    if t < 2:
        raise ParameterError(f"t must be >= 2, got {t}")
    c = t - 1
    if m == 1:
        return c
    if m == 2:
        return sum(c // s for s in range(1, c + 1))
    if m == 3:
        return sum(c // (s * r) for s in range(1, c + 1) for r in range(1, c // s + 1))
    raise ParameterError(f"closed form only for m in (1, 2, 3), got m={m}")
