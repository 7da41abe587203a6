import pytest

from src.algebra.lattice import (
    V,
    ExponentBox,
    ExponentSet,
    build_Delta_t,
    build_E0,
    delta_size,
    delta_size_closed_form,
    dis,
    footprint_bound,
    lex_compare,
)
from src.errors import ParameterError


class TestExponentBox:

    def test_lex_order(self):
        box = ExponentBox((4, 2))
        assert list(box) == [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1), (3, 0), (3, 1)]
        assert box.n == 8
        assert box.m == 2

    def test_first_size_multiple_of_q_plus_1(self):
        with pytest.raises(ParameterError):
            ExponentBox((5, 3), q=3)

    def test_exponent_set_rejects_outside_members(self):
        with pytest.raises(ParameterError):
            ExponentSet.from_iterable(ExponentBox((4, 2)), [(0, 2)])

    def test_lex_compare(self):
        assert lex_compare((0, 1), (1, 0)) == -1
        assert lex_compare((1, 0), (0, 1)) == 1
        assert lex_compare((2, 3), (2, 3)) == 0
        with pytest.raises(ParameterError):
            lex_compare((0,), (0, 0))


class TestFootprint:

    def test_dis(self):
        box = ExponentBox((8, 6))
        assert dis(box, (1, 2)) == 28
        assert dis(box, (7, 5)) == 1
        assert dis(box, (0, 0)) == 48

    def test_dis_outside_box(self):
        with pytest.raises(ParameterError):
            dis(ExponentBox((8, 6)), (8, 0))

    def test_footprint_staircase(self):
        box = ExponentBox((8, 6))
        members = [(a, b) for a in range(3) for b in range(2)] + [(0, 2), (1, 2)]
        assert footprint_bound(ExponentSet.from_iterable(box, members)) == 28

    def test_footprint_of_delta_5(self):
        box = ExponentBox((8, 6))
        delta = build_Delta_t(box, 5)
        assert len(delta) == 8
        assert footprint_bound(delta) == 24

    def test_footprint_of_origin(self):
        box = ExponentBox((8, 6))
        assert footprint_bound(ExponentSet.from_iterable(box, [(0, 0)])) == 48

    def test_footprint_of_empty_set(self):
        with pytest.raises(ParameterError):
            footprint_bound(ExponentSet.from_iterable(ExponentBox((8, 6)), []))


class TestRegions:

    def test_e0_m1(self):
        e0 = build_E0(ExponentBox((4,), q=3), 3)
        assert list(e0) == [(0,), (1,)]

    def test_e0_m2(self):
        assert len(build_E0(ExponentBox((4, 2), q=3), 3)) == 4

    def test_delta_3_two_variables(self):
        delta = build_Delta_t(ExponentBox((6, 6), q=5), 3)
        assert list(delta) == [(0, 0), (0, 1), (1, 0)]

    def test_delta_2_is_origin(self):
        assert list(build_Delta_t(ExponentBox((4, 4, 4), q=3), 2)) == [(0, 0, 0)]

    def test_delta_inside_e0(self):
        for q in (3, 5, 7):
            box = ExponentBox((q + 1, q + 1), q=q)
            e0 = build_E0(box, q)
            for t in range(2, (q + 3) // 2 + 1):
                assert build_Delta_t(box, t).issubset(e0)

    def test_delta_respects_short_coordinates(self):
        # a_3 = 2 removes (0, 0, 2) from Delta_4
        box = ExponentBox((24, 13, 2), q=23)
        assert len(build_Delta_t(box, 4)) == 6
        assert delta_size(box, 4) == 6

    def test_t_range(self):
        box = ExponentBox((4, 4), q=3)
        with pytest.raises(ParameterError):
            build_Delta_t(box, 1)
        with pytest.raises(ParameterError):
            build_Delta_t(box, 4)


class TestCounting:

    def test_v_base_cases(self):
        assert V(8, 1, 5) == 5
        assert V(3, 1, 5) == 3
        assert V(8, 3, 0) == 0
        assert V(8, 2, 2) == 3

    def test_v_rejects_invalid(self):
        with pytest.raises(ParameterError):
            V(0, 2, 3)

    @pytest.mark.parametrize("t,expected", [(5, 8), (6, 10), (7, 14)])
    def test_two_variable_sizes(self, t, expected):
        assert delta_size_closed_form(2, t) == expected
        box = ExponentBox((12, 12), q=11)
        assert delta_size(box, t) == expected

    def test_closed_forms_match_enumeration(self):
        for m in (1, 2, 3):
            for t in range(2, 9):
                box = ExponentBox((14,) * m, q=13)
                assert delta_size_closed_form(m, t) == len(build_Delta_t(box, t))

    def test_recursion_matches_enumeration(self):
        for q in (3, 5, 7, 9):
            for m in (1, 2, 3):
                box = ExponentBox((q + 1,) * m, q=q)
                for t in range(2, (q + 3) // 2 + 1):
                    assert delta_size(box, t) == len(build_Delta_t(box, t))

    def test_closed_form_only_small_m(self):
        with pytest.raises(ParameterError):
            delta_size_closed_form(4, 3)
