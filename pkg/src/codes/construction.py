"""
Construction of GMCCs: evaluation grid, twist vector, monomial evaluation,
generator matrices, inner products and dual twists.

Everything works in the discrete-log domain where possible: grid
coordinates are nonzero, so the value of a monomial at a point is
generator^(sum_j e_j * log P_j).
"""

import json
import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

import galois
import numpy as np

from ..algebra.field import FieldElement, field_of
from ..algebra.lattice import Exponent, ExponentSet, lex_compare
from ..errors import FieldArithmeticError, ParameterError
from .models import CodeParams, GeneratorMatrix, PointGrid, TwistVector

logger = logging.getLogger(__name__)


def build_grid(params: CodeParams) -> PointGrid:
    """
    Evaluation points P_alpha in lex order of alpha.

    Coordinate 1 of P_alpha is zeta_{lambda(q+1)}^{alpha_1}; coordinate j >= 2
    is the alpha_j-th element of A_j.
    """
    order = params.field.group_order
    indices = np.indices(params.sizes).reshape(params.m, -1).T

    logs = np.empty_like(indices, dtype=np.int64)
    logs[:, 0] = indices[:, 0] * (order // params.sizes[0])
    for j, eval_set in enumerate(params.eval_sets, start=1):
        logs[:, j] = np.asarray(eval_set, dtype=np.int64)[indices[:, j]]
    logs %= order

    return PointGrid(params=params, indices=indices, logs=logs)


def build_twist(params: CodeParams) -> TwistVector:
    """
    Block-alternating twist vector.

    q+1 blocks of length n/(q+1), starting with zeta_{q^2-1}^{(q-1)/2} and
    alternating with 1. Entry alpha lies in block floor(alpha_1 / lambda), so
    v_alpha^(q+1) = -1 exactly when (alpha_1 mod 2 lambda) <= lambda - 1.
    """
    q = params.q
    block = params.n // (q + 1)
    blocks = np.arange(params.n) // block
    logs = np.where(blocks % 2 == 0, (q - 1) // 2, 0)
    return TwistVector(params.field.from_logs(logs), canonical=True)


def eval_monomial(e: Exponent, v: TwistVector, grid: PointGrid) -> galois.FieldArray:
    """ev_v(X^e): coordinate alpha is v_alpha * prod_j (P_alpha)_j^{e_j}."""
    if not grid.params.box.contains(tuple(e)):
        raise ParameterError(f"exponent {tuple(e)} outside box {grid.params.sizes}")
    logs = grid.logs @ np.asarray(e, dtype=np.int64)
    return grid.params.field.from_logs(logs) * v.entries


def generator_matrix(delta: ExponentSet, v: TwistVector, grid: PointGrid) -> GeneratorMatrix:
    """Rows ev_v(X^e) for e in Delta, in lex order."""
    if not delta.members:
        raise ParameterError("generator matrix of an empty exponent set")
    if v.n != grid.n:
        raise ParameterError(f"twist length {v.n} != grid size {grid.n}")

    exponents = np.asarray(delta.members, dtype=np.int64)
    logs = exponents @ grid.logs.T
    matrix = grid.params.field.from_logs(logs) * v.entries

    logger.debug(f"Generator matrix {matrix.shape} for {grid.params.construction()}")
    return GeneratorMatrix(exponents=delta, matrix=matrix, twist=v)


# ============================================================================
# INNER PRODUCTS
# ============================================================================

def _check_pair(a: galois.FieldArray, b: galois.FieldArray) -> None:
    if type(a) is not type(b):
        raise FieldArithmeticError("vectors belong to different fields")
    if a.shape != b.shape:
        raise ParameterError(f"length mismatch: {a.shape} vs {b.shape}")


def hermitian_ip(a: galois.FieldArray, b: galois.FieldArray) -> FieldElement:
    """sum_i a_i * b_i^q."""
    _check_pair(a, b)
    spec = field_of(a)
    return spec.element(int(np.sum(a * b ** spec.q)))


def euclidean_ip(a: galois.FieldArray, b: galois.FieldArray) -> FieldElement:
    """sum_i a_i * b_i."""
    _check_pair(a, b)
    spec = field_of(a)
    return spec.element(int(np.sum(a * b)))


def star(a: galois.FieldArray, b: galois.FieldArray) -> galois.FieldArray:
    """Coordinate-wise product."""
    _check_pair(a, b)
    return a * b


def dual_twist(v: TwistVector) -> TwistVector:
    """w_i = 1 / v_i^q, the twist of the Hermitian dual."""
    if np.any(v.entries == 0):
        raise ParameterError("twist vector has a zero entry")
    q = field_of(v.entries).q
    return TwistVector(np.reciprocal(v.entries ** q), canonical=False)


# ============================================================================
# POLYNOMIALS SUPPORTED ON DELTA
# ============================================================================

def evaluate_polynomial(
    coefficients: galois.FieldArray, gm: GeneratorMatrix
) -> Tuple[galois.FieldArray, Optional[Exponent]]:
    """
    ev_v(f) for f = sum_e c_e X^e over Delta, plus the lex-leading exponent of f.

    Returns:
        (codeword, leading exponent or None when f = 0)
    """
    if coefficients.shape != (gm.dimension,):
        raise ParameterError(f"expected {gm.dimension} coefficients, got {coefficients.shape}")
    codeword = coefficients @ gm.matrix

    leading = None
    for e, c in zip(gm.exponents.members, coefficients.view(np.ndarray)):
        if c != 0 and (leading is None or lex_compare(e, leading) > 0):
            leading = e
    return codeword, leading


def load_eval_sets(path: Union[str, Path]) -> List[List[int]]:
    """
    Read A_2..A_m from a JSON file: a list of lists of generator exponents.

    Example file content: ``[[0, 1, 2, 5]]`` for A_2 = (1, g, g^2, g^5).
    """
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    if not isinstance(data, list) or not all(
        isinstance(s, list) and all(isinstance(x, int) for x in s) for s in data
    ):
        raise ParameterError(f"{path}: expected a JSON list of integer lists")
    return data
