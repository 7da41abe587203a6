"""
Data models for generalized monomial-Cartesian codes (GMCCs).

This module defines the code parameters, the evaluation grid, the twist
vector and the generator matrix of a GMCC over GF(q^2).
"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import galois
import numpy as np

from ..algebra.field import FieldSpec, check_odd_prime_power, make_field
from ..algebra.lattice import ExponentBox, ExponentSet
from ..errors import ParameterError


@dataclass(frozen=True)
class CodeParams:
    """
    Parameters (q, lambda, sizes, A_j) of a GMCC.

    The first evaluation set A_1 is implicit: the lambda(q+1)-th roots of
    unity, ordered zeta^0, zeta^1, ... The remaining sets A_2..A_m are stored
    as discrete logs to the field generator, in their chosen order.

    Attributes:
        q: Odd prime power; the code lives over GF(q^2)
        lam: Positive divisor of q - 1
        sizes: (a_1, ..., a_m) with a_1 = lam * (q + 1) and 2 <= a_j <= q^2 - 1 for j >= 2
        eval_sets: Generator exponents of A_2..A_m, one tuple per coordinate
        field: GF(q^2)

    Example:
        >>> params = CodeParams.create(q=5, lam=1, sizes_tail=(13,))
        >>> params.n
        78
    """

    q: int
    lam: int
    sizes: Tuple[int, ...]
    eval_sets: Tuple[Tuple[int, ...], ...]
    field: FieldSpec

    @classmethod
    def create(
        cls,
        q: int,
        lam: int,
        sizes_tail: Sequence[int] = (),
        eval_sets: Optional[Sequence[Sequence[int]]] = None,
    ) -> "CodeParams":
        """
        Validate and build code parameters.

        Args:
            q: Odd prime power
            lam: Divisor of q - 1
            sizes_tail: (a_2, ..., a_m)
            eval_sets: Optional generator exponents for A_2..A_m; defaults to
                A_j = (zeta^0, ..., zeta^(a_j - 1)) for zeta the field generator

        Raises:
            ParameterError: Any parameter outside its admissible range
        """
        p, e = check_odd_prime_power(q)
        if lam < 1 or (q - 1) % lam != 0:
            raise ParameterError(f"lambda={lam} does not divide q-1={q - 1}")

        field = make_field(p, 2 * e)

        tail = tuple(int(a) for a in sizes_tail)
        for a in tail:
            if not 2 <= a <= q * q - 1:
                raise ParameterError(f"a_j={a} outside [2, {q * q - 1}]")

        if eval_sets is None:
            sets = tuple(tuple(range(a)) for a in tail)
        else:
            sets = tuple(tuple(int(x) for x in s) for s in eval_sets)
            if len(sets) != len(tail):
                raise ParameterError(
                    f"{len(sets)} evaluation sets given for {len(tail)} coordinates"
                )
            for j, (s, a) in enumerate(zip(sets, tail), start=2):
                if len(s) != a:
                    raise ParameterError(f"A_{j} has {len(s)} elements, expected a_{j}={a}")
                if len({x % field.group_order for x in s}) != len(s):
                    raise ParameterError(f"A_{j} has repeated elements")

        return cls(
            q=q,
            lam=lam,
            sizes=(lam * (q + 1),) + tail,
            eval_sets=sets,
            field=field,
        )

    @property
    def m(self) -> int:
        return len(self.sizes)

    @property
    def n(self) -> int:
        return math.prod(self.sizes)

    @property
    def box(self) -> ExponentBox:
        return ExponentBox(self.sizes, self.q)

    @property
    def uses_default_eval_sets(self) -> bool:
        return all(s == tuple(range(len(s))) for s in self.eval_sets)

    def construction(self, t: Optional[int] = None) -> str:
        """Canonical provenance string, e.g. ``gmcc(q=5,lambda=1,sizes=6x13,t=3)``."""
        parts = [f"q={self.q}", f"lambda={self.lam}", "sizes=" + "x".join(map(str, self.sizes))]
        if not self.uses_default_eval_sets:
            parts.append("A=" + "|".join(",".join(map(str, s)) for s in self.eval_sets))
        if t is not None:
            parts.append(f"t={t}")
        return "gmcc(" + ",".join(parts) + ")"

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "lambda": self.lam,
            "m": self.m,
            "sizes": list(self.sizes),
            "n": self.n,
            "eval_sets": [list(s) for s in self.eval_sets],
        }


@dataclass(frozen=True, eq=False)
class PointGrid:
    """
    Evaluation points Z = A_1 x ... x A_m in lex order of their index tuples.

    Attributes:
        params: Owning code parameters
        indices: (n, m) array; row alpha is the index tuple of P_alpha
        logs: (n, m) array of generator exponents of the point coordinates
    """

    params: CodeParams
    indices: np.ndarray
    logs: np.ndarray

    @property
    def n(self) -> int:
        return self.indices.shape[0]

    @property
    def points(self) -> galois.FieldArray:
        """(n, m) field array of coordinates."""
        return self.params.field.from_logs(self.logs)


@dataclass(frozen=True, eq=False)
class TwistVector:
    """
    Per-coordinate nonzero multipliers v of the evaluation map.

    Attributes:
        entries: Length-n field array, indexed like the grid points
        canonical: True for the block-alternating twist, False for any other
    """

    entries: galois.FieldArray
    canonical: bool = True

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def ones(cls, params: CodeParams) -> "TwistVector":
        """The untwisted vector v = (1, ..., 1)."""
        return cls(params.field.galois_field.Ones(params.n), canonical=False)


@dataclass(frozen=True, eq=False)
class GeneratorMatrix:
    """
    Generator matrix of C_{v,Delta}: row e is ev_v(X^e).

    Attributes:
        exponents: Delta, whose lex order is the row order
        matrix: (#Delta, n) field array; column order is the lex order of Z
        twist: Twist vector used for the evaluation
    """

    exponents: ExponentSet
    matrix: galois.FieldArray
    twist: TwistVector

    @property
    def n(self) -> int:
        return self.matrix.shape[1]

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def rank(self) -> int:
        return int(np.linalg.matrix_rank(self.matrix))
