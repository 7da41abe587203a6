import json

import numpy as np
import pytest

from src.algebra.field import element_logs, neg
from src.algebra.lattice import ExponentSet, build_Delta_t, dis
from src.codes.construction import (
    build_grid,
    build_twist,
    dual_twist,
    euclidean_ip,
    eval_monomial,
    evaluate_polynomial,
    generator_matrix,
    hermitian_ip,
    load_eval_sets,
    star,
)
from src.codes.models import CodeParams, TwistVector
from src.errors import FieldArithmeticError, ParameterError
from src.verification.distance import weight_distribution


class TestCodeParams:

    def test_lengths(self):
        assert CodeParams.create(5, 1, (13,)).n == 78
        assert CodeParams.create(7, 2).n == 16
        assert CodeParams.create(9, 1, (80, 2)).sizes == (10, 80, 2)

    def test_construction_string(self):
        params = CodeParams.create(5, 1, (13,))
        assert params.construction(3) == "gmcc(q=5,lambda=1,sizes=6x13,t=3)"

    def test_even_q_rejected_first(self):
        with pytest.raises(ParameterError, match="q must be odd"):
            CodeParams.create(4, 1)

    @pytest.mark.parametrize(
        "q,lam,tail",
        [(15, 1, ()), (9, 3, ()), (5, 1, (1,)), (5, 1, (25,)), (3, 0, ())],
    )
    def test_rejects_invalid(self, q, lam, tail):
        with pytest.raises(ParameterError):
            CodeParams.create(q, lam, tail)

    def test_custom_eval_sets(self):
        params = CodeParams.create(3, 1, (2,), eval_sets=[[0, 3]])
        assert not params.uses_default_eval_sets
        assert "A=0,3" in params.construction(3)

    def test_eval_sets_validated(self):
        with pytest.raises(ParameterError):
            CodeParams.create(3, 1, (2,), eval_sets=[[0, 8]])
        with pytest.raises(ParameterError):
            CodeParams.create(3, 1, (2,), eval_sets=[[0, 1, 2]])

    def test_load_eval_sets(self, tmp_path):
        path = tmp_path / "sets.json"
        path.write_text(json.dumps([[0, 1, 2, 5]]))
        assert load_eval_sets(path) == [[0, 1, 2, 5]]

        path.write_text(json.dumps({"A2": [0, 1]}))
        with pytest.raises(ParameterError):
            load_eval_sets(path)


class TestGrid:

    def test_one_variable(self, q3_m1):
        grid = build_grid(q3_m1)
        assert grid.n == 4
        assert element_logs(grid.points[:, 0]) == [0, 2, 4, 6]

    def test_two_variables(self, q3_m2):
        grid = build_grid(q3_m2)
        assert grid.n == 8
        assert grid.logs[:2].tolist() == [[0, 0], [0, 1]]
        assert grid.indices[-1].tolist() == [3, 1]


class TestTwist:

    def test_one_variable(self, q3_m1, gf9):
        v = build_twist(q3_m1)
        assert element_logs(v.entries) == [1, 0, 1, 0]
        assert element_logs(v.entries ** 4) == [4, 0, 4, 0]  # g^4 = -1

    def test_two_variables(self, q3_m2):
        v = build_twist(q3_m2)
        assert element_logs(v.entries) == [1, 1, 0, 0, 1, 1, 0, 0]

    def test_norm_pattern(self):
        for q, lam, tail in [(3, 2, (3,)), (5, 2, (2,)), (7, 3, ()), (9, 4, (2, 2)), (11, 5, (3,))]:
            params = CodeParams.create(q, lam, tail)
            v = build_twist(params)
            minus_one = int(neg(params.field.one()))
            norms = (v.entries ** (q + 1)).view(np.ndarray)
            alpha_1 = build_grid(params).indices[:, 0]
            expected = np.where(alpha_1 % (2 * lam) <= lam - 1, minus_one, 1)
            assert np.array_equal(norms, expected)


class TestEvaluation:

    def test_origin_evaluates_to_twist(self, q3_m1):
        grid, v = build_grid(q3_m1), build_twist(q3_m1)
        assert np.array_equal(eval_monomial((0,), v, grid), v.entries)

    def test_linear_monomial(self, q3_m1):
        word = eval_monomial((1,), build_twist(q3_m1), build_grid(q3_m1))
        assert element_logs(word) == [1, 2, 5, 6]
        assert np.count_nonzero(word) == 4

    def test_outside_box(self, q3_m1):
        with pytest.raises(ParameterError):
            eval_monomial((4,), build_twist(q3_m1), build_grid(q3_m1))

    def test_generator_matrix_rank(self, q3_m1):
        delta = ExponentSet.from_iterable(q3_m1.box, [(0,), (1,)])
        gm = generator_matrix(delta, build_twist(q3_m1), build_grid(q3_m1))
        assert gm.matrix.shape == (2, 4)
        assert gm.rank() == 2

    def test_injective_on_delta(self):
        for q, lam, tail, t in [(5, 1, (13,), 4), (7, 1, (8,), 5), (3, 1, (4, 4), 3)]:
            params = CodeParams.create(q, lam, tail)
            delta = build_Delta_t(params.box, t)
            gm = generator_matrix(delta, build_twist(params), build_grid(params))
            assert gm.rank() == len(delta)

    def test_evaluate_polynomial(self, q3_m1, gf9):
        delta = ExponentSet.from_iterable(q3_m1.box, [(0,), (1,)])
        gm = generator_matrix(delta, build_twist(q3_m1), build_grid(q3_m1))
        codeword, leading = evaluate_polynomial(gf9.array([1, 0]), gm)
        assert np.array_equal(codeword, gm.matrix[0])
        assert leading == (0,)
        _, leading = evaluate_polynomial(gf9.array([0, 2]), gm)
        assert leading == (1,)
        _, leading = evaluate_polynomial(gf9.array([0, 0]), gm)
        assert leading is None

    @pytest.mark.parametrize(
        "q,lam,tail,t",
        [(3, 1, (4,), 3), (5, 1, (6,), 4), (5, 2, (), 4), (7, 1, (8,), 5), (3, 2, (3, 3), 3)],
    )
    def test_random_polynomials_meet_footprint_bound(self, q, lam, tail, t):
        params = CodeParams.create(q, lam, tail)
        gm = generator_matrix(build_Delta_t(params.box, t), build_twist(params), build_grid(params))
        rng = np.random.default_rng(q * 100 + t)
        field = params.field

        for _ in range(200):
            values = rng.integers(0, field.size, gm.dimension)
            values[rng.random(gm.dimension) < 0.5] = 0
            codeword, leading = evaluate_polynomial(field.array(values), gm)
            if leading is None:
                assert not np.any(codeword)
                continue
            assert np.count_nonzero(codeword) >= dis(params.box, leading)


class TestInnerProducts:

    def test_zero_vector(self, gf9):
        x = gf9.array([1, 3, 5])
        assert hermitian_ip(x, gf9.array([0, 0, 0])).is_zero

    def test_twist_is_isotropic(self, q3_m1):
        v = build_twist(q3_m1).entries
        assert hermitian_ip(v, v).is_zero

    def test_euclidean(self, gf9):
        assert euclidean_ip(gf9.array([1, 1]), gf9.array([1, 2])).is_zero

    def test_star(self, gf9):
        a = gf9.from_logs(np.array([1, 2]))
        assert element_logs(star(a, a)) == [2, 4]

    def test_length_mismatch(self, gf9):
        with pytest.raises(ParameterError):
            euclidean_ip(gf9.array([1]), gf9.array([1, 1]))

    def test_mixed_fields(self, gf9, gf25):
        with pytest.raises(FieldArithmeticError):
            euclidean_ip(gf9.array([1]), gf25.array([1]))


class TestDualTwist:

    def test_all_ones(self, q3_m1):
        w = dual_twist(TwistVector.ones(q3_m1))
        assert element_logs(w.entries) == [0, 0, 0, 0]

    def test_canonical_twist(self, q3_m1):
        w = dual_twist(build_twist(q3_m1))
        assert element_logs(w.entries) == [5, 0, 5, 0]

    def test_involution(self):
        v = build_twist(CodeParams.create(5, 2, (3,)))
        assert np.array_equal(dual_twist(dual_twist(v)).entries, v.entries)

    def test_zero_entry(self, gf9):
        with pytest.raises(ParameterError):
            dual_twist(TwistVector(gf9.array([1, 0])))


def test_twisted_and_untwisted_codes_are_isometric():
    for q, lam, tail, exponents in [(3, 1, (), [(0,), (1,)]), (3, 2, (), [(0,), (1,), (2,)]), (3, 1, (3,), [(0, 0), (0, 1)])]:
        params = CodeParams.create(q, lam, tail)
        delta = ExponentSet.from_iterable(params.box, exponents)
        grid = build_grid(params)
        twisted = generator_matrix(delta, build_twist(params), grid)
        untwisted = generator_matrix(delta, TwistVector.ones(params), grid)
        assert weight_distribution(twisted) == weight_distribution(untwisted)
