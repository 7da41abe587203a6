import threading
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest

from src.algebra.field import (
    add,
    build_field,
    check_odd_prime_power,
    conj,
    element_logs,
    field_of,
    inv,
    make_field,
    mul,
    neg,
    power,
    prime_power_parts,
    root_of_unity,
    solve_qplus1_power_eq_minus_one,
)
from src.errors import FieldArithmeticError, FieldConstructionError, ParameterError


class TestMakeField:

    def test_prime_field_generator_is_smallest_primitive_root(self):
        gf3 = make_field(3, 1)
        assert gf3.size == 3
        assert gf3.generator == 2
        assert gf3.generator_order() == 2

    def test_gf9_canonical_modulus(self, gf9):
        assert gf9.modulus == (1, 1, 2)
        assert gf9.generator == 3
        assert gf9.generator_order() == 8
        assert gf9.q == 3

    def test_cached(self):
        assert make_field(5, 2) is make_field(5, 2)

    @pytest.mark.parametrize("p,k", [(3, 2), (5, 2), (7, 2), (3, 4), (11, 2)])
    def test_rebuild_is_identical(self, p, k):
        cached = make_field(p, k)
        fresh = build_field(p, k)
        assert fresh is not cached
        assert fresh == cached
        assert np.array_equal(fresh.exp_table, cached.exp_table)
        assert np.array_equal(fresh.log_table, cached.log_table)
        assert field_of(cached.array([1])) is cached

    def test_concurrent_first_use(self):
        barrier = threading.Barrier(8)

        def build(_):
            barrier.wait()
            return make_field(19, 2)

        with ThreadPoolExecutor(max_workers=8) as pool:
            specs = list(pool.map(build, range(8)))
        assert all(spec is specs[0] for spec in specs)
        assert specs[0].generator_order() == 360

    def test_tables_are_inverse(self, gf25):
        logs = np.arange(gf25.group_order)
        assert np.array_equal(gf25.log_table[gf25.exp_table[logs]], logs)
        assert gf25.log_table[0] == -1

    @pytest.mark.parametrize("p,k", [(4, 1), (1, 2), (3, 0), (2, 21)])
    def test_rejects_invalid(self, p, k):
        with pytest.raises(FieldConstructionError):
            make_field(p, k)


class TestPrimePowers:

    @pytest.mark.parametrize("n,parts", [(3, (3, 1)), (9, (3, 2)), (125, (5, 3)), (2, (2, 1))])
    def test_parts(self, n, parts):
        assert prime_power_parts(n) == parts

    @pytest.mark.parametrize("n", [0, 1, 6, 15, 45])
    def test_not_prime_powers(self, n):
        assert prime_power_parts(n) is None

    def test_odd_check(self):
        assert check_odd_prime_power(81) == (3, 4)
        with pytest.raises(ParameterError, match="q must be odd"):
            check_odd_prime_power(8)
        with pytest.raises(ParameterError):
            check_odd_prime_power(21)


QUADRATIC_FIELDS = [(3, 2), (5, 2), (7, 2), (3, 4), (11, 2)]


class TestFieldInvariants:

    @pytest.mark.parametrize("p,k", QUADRATIC_FIELDS)
    def test_conj_is_additive_and_multiplicative(self, p, k):
        spec = make_field(p, k)
        gf = spec.galois_field
        conj_of = gf([conj(spec.element(i)).index for i in range(spec.size)])

        idx = np.arange(spec.size)
        a, b = gf(idx[:, np.newaxis]), gf(idx[np.newaxis, :])
        column, row = conj_of[:, np.newaxis], conj_of[np.newaxis, :]

        assert np.array_equal(conj_of[(a + b).view(np.ndarray)], column + row)
        assert np.array_equal(conj_of[(a * b).view(np.ndarray)], column * row)

    @pytest.mark.parametrize("p,k", QUADRATIC_FIELDS)
    def test_inverse(self, p, k):
        spec = make_field(p, k)
        for i in range(1, spec.size):
            x = spec.element(i)
            assert mul(x, inv(x)) == spec.one()

    @pytest.mark.parametrize("p,k", [(3, 2), (5, 2), (7, 2), (3, 4), (11, 2), (13, 1)])
    def test_root_of_unity_has_exact_order(self, p, k):
        spec = make_field(p, k)
        one = spec.one()
        for t in range(1, spec.group_order + 1):
            if spec.group_order % t:
                continue
            zeta = root_of_unity(spec, t)
            powers = [power(zeta, s) for s in range(1, t + 1)]
            assert powers[-1] == one
            assert one not in powers[:-1]


class TestArithmetic:

    def test_inverse_of_one(self, gf9):
        assert inv(gf9.one()) == gf9.one()

    def test_generator_order(self, gf9):
        g = gf9.from_log(1)
        assert mul(power(g, 4), power(g, 4)) == gf9.one()
        assert power(g, 4) != gf9.one()
        assert power(g, 9) == g

    def test_matches_galois(self, gf9):
        gf = gf9.galois_field
        for a in range(9):
            for b in range(9):
                x, y = gf9.element(a), gf9.element(b)
                assert int(mul(x, y)) == int(gf(a) * gf(b))
                assert int(add(x, y)) == int(gf(a) + gf(b))

    def test_operators(self, gf9):
        g = gf9.from_log(1)
        assert g + (-g) == gf9.zero()
        assert g / g == gf9.one()
        assert g - g == gf9.zero()
        assert g ** 3 == gf9.from_log(3)
        assert str(g ** 3) == "g^3"

    def test_inverse_of_zero(self, gf9):
        with pytest.raises(FieldArithmeticError):
            inv(gf9.zero())

    def test_mixed_fields(self, gf9, gf25):
        with pytest.raises(FieldArithmeticError):
            add(gf9.one(), gf25.one())

    def test_negative_exponent(self, gf9):
        with pytest.raises(ParameterError):
            power(gf9.one(), -1)

    def test_index_range(self, gf9):
        with pytest.raises(FieldArithmeticError):
            gf9.element(9)


class TestConjugation:

    def test_fixes_subfield_identity(self, gf9):
        assert conj(gf9.zero()) == gf9.zero()
        assert conj(gf9.one()) == gf9.one()

    def test_generator(self, gf9):
        g = gf9.from_log(1)
        assert conj(g) == power(g, 3)

    def test_involution(self, gf25):
        for x in range(25):
            a = gf25.element(x)
            assert conj(conj(a)) == a

    def test_fixed_points(self, gf25):
        fixed = [x for x in range(25) if conj(gf25.element(x)) == gf25.element(x)]
        assert len(fixed) == 5

    def test_requires_quadratic_extension(self):
        with pytest.raises(FieldArithmeticError):
            conj(make_field(3, 1).one())


class TestDistinguishedElements:

    def test_root_of_unity(self, gf9):
        assert root_of_unity(gf9, 1) == gf9.one()
        assert root_of_unity(gf9, 8) == gf9.from_log(1)
        zeta = root_of_unity(gf9, 4)
        assert zeta == gf9.from_log(2)
        assert power(zeta, 4) == gf9.one()
        assert power(zeta, 2) != gf9.one()

    def test_root_of_unity_requires_divisor(self, gf9):
        with pytest.raises(ParameterError):
            root_of_unity(gf9, 5)

    def test_qplus1_solutions_gf9(self, gf9):
        solutions = solve_qplus1_power_eq_minus_one(gf9)
        assert sorted(x.log for x in solutions) == [1, 3, 5, 7]

    @pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13])
    def test_qplus1_solution_count(self, q):
        p, e = check_odd_prime_power(q)
        spec = make_field(p, 2 * e)
        minus_one = neg(spec.one())

        scanned = {x for x in map(spec.element, range(spec.size)) if power(x, q + 1) == minus_one}
        assert len(scanned) == q + 1
        assert solve_qplus1_power_eq_minus_one(spec) == scanned

    def test_qplus1_solutions_gf25(self, gf25):
        solutions = solve_qplus1_power_eq_minus_one(gf25)
        assert len(solutions) == 6
        assert gf25.from_log(2) in solutions
        zeta = root_of_unity(gf25, 6)
        assert {mul(x, zeta) for x in solutions} == solutions
        minus_one = neg(gf25.one())
        assert all(power(x, 6) == minus_one for x in solutions)


class TestArrays:

    def test_element_logs(self, gf9):
        assert element_logs(gf9.array([0, 1, 3])) == [None, 0, 1]

    def test_from_logs_reduces(self, gf9):
        values = gf9.from_logs(np.array([0, 8, 9, -1]))
        assert element_logs(values) == [0, 0, 1, 7]

    def test_field_of(self, gf9):
        assert field_of(gf9.array([1, 2])) is gf9
