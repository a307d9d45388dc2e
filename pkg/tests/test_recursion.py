import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torushom.algebra import (
    A,
    LaurentPoly,
    ONE,
    Q,
    RatFunc,
    T,
    series_truncate,
)
from torushom import recursion
from torushom.recursion import (
    euler_a0,
    hhh_a0,
    hhh_torus,
    pair_series,
    reduced_knot_poly,
    term_census_a,
)


def mono(c, ea=0, eq=0, et=0):
    return LaurentPoly.monomial(c, ea, eq, et)


BASE = RatFunc.of(ONE + A, 1)


class TestPairSeries:
    def test_empty_pair(self):
        assert pair_series("", "") == RatFunc.one()

    def test_unknot(self):
        assert pair_series("0", "0") == BASE

    def test_base_rule(self):
        assert pair_series("", "000") == RatFunc((ONE + A) ** 3, 3)
        assert pair_series("00", "") == RatFunc((ONE + A) ** 2, 2)

    def test_trefoil_pair(self):
        expected = RatFunc.of(
            (ONE + A) * (ONE + mono(1, ea=1, et=-1) + mono(1, eq=1, et=-1)), 1
        )
        assert pair_series("00", "000") == expected

    def test_unbalanced_rejected(self):
        with pytest.raises(ValueError, match="unbalanced"):
            pair_series("1", "0")

    def test_non_binary_rejected(self):
        with pytest.raises(ValueError):
            pair_series("012", "012")

    def test_length_guard(self):
        with pytest.raises(ValueError, match="length"):
            pair_series("0" * 40, "0" * 40)

    def test_memo_determinism(self):
        first = hhh_torus(3, 5)
        recursion.clear_memo()
        assert hhh_torus(3, 5) == first

    @given(st.integers(1, 6), st.integers(1, 6))
    @settings(deadline=None)
    def test_symmetry(self, m, n):
        assert pair_series("0" * m, "0" * n) == pair_series("0" * n, "0" * m)

    @given(st.integers(0, 8), st.integers(0, 8))
    @settings(deadline=None)
    def test_terminates_on_balanced_zero_pairs(self, m, n):
        pair_series("0" * m, "0" * n)  # must not hang or raise

    @given(
        st.lists(st.sampled_from("01"), max_size=8).map("".join),
        st.lists(st.sampled_from("01"), max_size=8).map("".join),
    )
    @settings(deadline=None)
    def test_terminates_on_general_pairs(self, v, w):
        if v.count("1") == w.count("1"):
            pair_series(v, w)


class TestTorusSeries:
    def test_hopf(self):
        expected = RatFunc.of(
            mono(1, et=-1) * (ONE + A) * (T + Q - Q * T + A), 2
        )
        assert hhh_torus(2, 2) == expected

    def test_two_strand_trivial(self):
        assert hhh_torus(2, 0) == RatFunc((ONE + A) ** 2, 2)

    def test_trefoil_a0(self):
        assert hhh_a0(2, 3) == RatFunc.of(ONE + mono(1, eq=1, et=-1), 1)

    def test_two_strand_knot_family(self):
        for k in range(1, 6):
            expected = RatFunc.of(LaurentPoly({(0, i, -i): 1 for i in range(k + 1)}), 1)
            assert hhh_a0(2, 2 * k + 1) == expected

    def test_hopf_a0(self):
        expected = RatFunc.of(mono(1, et=-1) * (Q + T - Q * T), 2)
        assert hhh_a0(2, 2) == expected

    def test_unknot_a0(self):
        assert hhh_a0(1, 1) == RatFunc.of(ONE, 1)

    @given(st.integers(0, 10))
    @settings(deadline=None)
    def test_two_strand_skein_recursion(self, m):
        lhs = hhh_torus(2, m + 2)
        step = RatFunc.of(mono(1, et=-1) * (T + A) * (ONE + A), 1)
        rhs = step + RatFunc.from_poly(mono(1, eq=1, et=-1)) * hhh_torus(2, m)
        assert lhs == rhs

    def test_effectivity(self):
        for m in range(1, 10):
            for n in range(1, 10):
                if m + n > 10:
                    continue
                series_truncate(hhh_torus(m, n), 12)  # raises on negatives


class TestSpecializations:
    def test_euler_trefoil(self):
        assert euler_a0(2, 3) == RatFunc.of(ONE + mono(1, eq=2), 1)

    def test_euler_hopf(self):
        assert euler_a0(2, 2) == RatFunc.of(ONE - Q + Q * Q, 2)

    def test_euler_unknot(self):
        assert euler_a0(1, 1) == RatFunc.of(ONE, 1)

    def test_census_t34(self):
        assert term_census_a(3, 4) == [(0, 5), (1, 5), (2, 1)]

    def test_census_trefoil(self):
        assert term_census_a(2, 3) == [(0, 2), (1, 1)]

    def test_census_unknot(self):
        assert term_census_a(1, 1) == [(0, 1)]

    def test_census_total_is_reduced_dimension(self):
        # 11 generators in three a-degrees for T(3,4)
        assert sum(c for _, c in term_census_a(3, 4)) == 11

    def test_census_rejects_links(self):
        with pytest.raises(ValueError, match="not a knot"):
            term_census_a(2, 4)

    def test_reduced_trefoil(self):
        assert reduced_knot_poly(2, 3) == Q + T

    def test_reduced_t25(self):
        assert reduced_knot_poly(2, 5) == Q * Q + Q * T + T * T

    def test_reduced_t34(self):
        p = reduced_knot_poly(3, 4)
        assert len(p.terms) == 5
        assert p.swap_qt() == p
        assert sum(p.evaluate_qt1().values()) == 5

    def test_reduced_rejects_links(self):
        with pytest.raises(ValueError, match="not a knot"):
            reduced_knot_poly(2, 2)

    @pytest.mark.parametrize("m,n", [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5)])
    def test_qt_symmetry(self, m, n):
        p = reduced_knot_poly(m, n)
        assert p.swap_qt() == p
        assert sum(p.evaluate_qt1().values()) == dict(term_census_a(m, n))[0]
