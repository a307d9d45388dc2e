import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from torushom.algebra import (
    A,
    GradedTable,
    LaurentPoly,
    ONE,
    Q,
    RatFunc,
    T,
    divide_by_one_minus_q,
    divide_by_one_plus_a,
    lp_substitute_monomial,
    monomial_ratio,
    qta_degree_from_QTA,
    ratfunc_from_json,
    ratfunc_normalize,
    ratfunc_to_json,
    render_poly,
    render_ratfunc,
    series_truncate,
    table_from_json,
    table_to_json,
)


def mono(c, ea=0, eq=0, et=0):
    return LaurentPoly.monomial(c, ea, eq, et)


exponents = st.tuples(
    st.integers(0, 3), st.integers(-4, 4), st.integers(-4, 4)
)
polys = st.dictionaries(exponents, st.integers(-9, 9), max_size=6).map(LaurentPoly)
monomials = st.tuples(exponents, st.sampled_from([1, -1, 2, -3])).map(
    lambda ec: LaurentPoly({ec[0]: ec[1]})
)


class TestLaurentArithmetic:
    def test_distributivity_example(self):
        lhs = (ONE + mono(1, eq=1, et=-1)) * (ONE - Q)
        expected = LaurentPoly(
            {(0, 0, 0): 1, (0, 1, 0): -1, (0, 1, -1): 1, (0, 2, -1): -1}
        )
        assert lhs == expected

    def test_zero_absorbs(self):
        p = ONE + Q * T
        assert p * LaurentPoly.zero() == LaurentPoly.zero()
        assert (p * LaurentPoly.zero()).terms == {}

    def test_cancellation(self):
        assert (T + Q) + (-Q) == T

    def test_negative_a_exponent_rejected(self):
        with pytest.raises(ValueError):
            LaurentPoly({(-1, 0, 0): 1})

    @given(polys, polys, polys)
    def test_ring_axioms(self, p1, p2, p3):
        assert p1 + p2 == p2 + p1
        assert p1 * p2 == p2 * p1
        assert (p1 + p2) + p3 == p1 + (p2 + p3)
        assert (p1 * p2) * p3 == p1 * (p2 * p3)
        assert p1 * (p2 + p3) == p1 * p2 + p1 * p3


class TestSubstitution:
    def test_t_to_q_inverse(self):
        p = ONE + mono(1, eq=1, et=-1)
        assert lp_substitute_monomial(p, "t", mono(1, eq=-1)) == ONE + mono(1, eq=2)

    def test_a_to_zero(self):
        p = (ONE + A) * (T + A)
        assert lp_substitute_monomial(p, "a", None) == T

    def test_identity(self):
        p = (ONE + A) * (T + Q)
        assert lp_substitute_monomial(p, "q", Q) == p

    def test_invariant_violation(self):
        with pytest.raises(ValueError):
            lp_substitute_monomial(ONE + Q, "q", A)  # fine
            lp_substitute_monomial(mono(1, eq=-1), "q", A)


class TestRatFunc:
    def test_exact_cancellation(self):
        assert ratfunc_normalize(ONE - Q, 1) == RatFunc(ONE, 0)

    def test_non_divisible_numerator(self):
        num = ONE + mono(1, eq=1, et=-1)
        assert ratfunc_normalize(num, 1) == RatFunc(num, 1)

    def test_square_cancels_once(self):
        assert ratfunc_normalize((ONE - Q) ** 2, 1) == RatFunc(ONE - Q, 0)

    def test_mul(self):
        base = RatFunc.of(ONE + A, 1)
        sq = base * base
        assert sq == RatFunc((ONE + A) ** 2, 2)

    def test_two_strand_sum(self):
        # t^-1 (t+a)(1+a)/(1-q) + q t^-1 (1+a)^2/(1-q)^2
        #   = t^-1 (1+a)(t+q-qt+a)/(1-q)^2
        t_inv = mono(1, et=-1)
        lhs = RatFunc.of(t_inv * (T + A) * (ONE + A), 1) + RatFunc.of(
            Q * t_inv * (ONE + A) ** 2, 2
        )
        rhs = RatFunc.of(t_inv * (ONE + A) * (T + Q - Q * T + A), 2)
        assert lhs == rhs

    def test_add_zero(self):
        x = RatFunc.of(ONE + A, 1)
        assert x + RatFunc.zero() == x

    @given(polys, st.integers(0, 3))
    def test_normalize_idempotent(self, num, d):
        r = ratfunc_normalize(num, d)
        assert ratfunc_normalize(r.num, r.denom_pow) == r

    @given(
        st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
        st.sampled_from([1, -1]),
        st.integers(0, 3),
    )
    def test_monomial_inverse(self, exps, coeff, d):
        eq, et = exps
        num = LaurentPoly({(0, eq, et): coeff})
        x = RatFunc.of(num, d)
        inv_num = LaurentPoly({(0, -eq, -et): coeff}) * (ONE - Q) ** d
        assert x * RatFunc.of(inv_num, 0) == RatFunc.one()

    def test_division_helpers(self):
        assert divide_by_one_minus_q((ONE - Q) * (T + A)) == T + A
        assert divide_by_one_minus_q(ONE + Q) is None
        assert divide_by_one_plus_a((ONE + A) * (T + Q)) == T + Q
        assert divide_by_one_plus_a(ONE + A + A * A) is None


class TestMonomialRatio:
    def test_shift(self):
        p = Q + T
        m = mono(1, eq=3, et=-1)
        assert monomial_ratio(p, m * p) == m

    def test_identity(self):
        assert monomial_ratio(Q + T, Q + T) == ONE

    def test_incompatible(self):
        assert monomial_ratio(Q + T, Q + T * T) is None

    @given(polys.filter(lambda p: not p.is_zero()), monomials)
    def test_roundtrip(self, p, m):
        assert monomial_ratio(p, m * p) == m


class TestSeriesTruncate:
    def test_geometric(self):
        table = series_truncate(RatFunc.of(ONE, 1), 3)
        assert table.as_dict() == {(k, 0, 0): 1 for k in range(4)}

    def test_t23_series(self):
        r = RatFunc.of(ONE + mono(1, eq=1, et=-1), 1)
        table = series_truncate(r, 2)
        assert table.as_dict() == {
            (0, 0, 0): 1,
            (1, 0, 0): 1,
            (2, 0, 0): 1,
            (1, -1, 0): 1,
            (2, -1, 0): 1,
        }

    def test_binomial_expansion(self):
        r = RatFunc.of(mono(1, eq=1, et=-1), 2)
        table = series_truncate(r, 2)
        assert table.as_dict() == {(1, -1, 0): 1, (2, -1, 0): 2}

    def test_negative_coefficient_rejected(self):
        with pytest.raises(ValueError):
            series_truncate(RatFunc.of(-ONE, 1), 2)

    @given(
        st.dictionaries(exponents, st.integers(1, 5), min_size=1, max_size=4),
        st.integers(0, 2),
        st.integers(1, 6),
    )
    def test_restriction_consistency(self, terms, d, depth):
        r = RatFunc.of(LaurentPoly(terms), d)
        big = series_truncate(r, depth)
        small = series_truncate(r, depth - 1) if depth > 0 else None
        if small is not None:
            assert big.restrict(depth - 1) == small


class TestDegreeDictionary:
    def test_paper_example(self):
        assert qta_degree_from_QTA(4, -2, 0) == (1, -1, 0)

    def test_identity(self):
        assert qta_degree_from_QTA(0, 0, 0) == (0, 0, 0)

    def test_leftmost_t34_generator(self):
        assert qta_degree_from_QTA(-6, 0, 0) == (-3, 0, 0)

    def test_q_square(self):
        assert qta_degree_from_QTA(2, 0, 0) == (1, 0, 0)

    def test_parity_violation(self):
        with pytest.raises(ValueError):
            qta_degree_from_QTA(1, 1, 0)
        with pytest.raises(ValueError):
            qta_degree_from_QTA(3, 1, 0)

    @given(
        st.tuples(st.integers(-6, 6), st.integers(-6, 6), st.integers(0, 3)),
        st.tuples(st.integers(-6, 6), st.integers(-6, 6), st.integers(0, 3)),
    )
    def test_injective(self, x, y):
        def admissible(v):
            return v[1] % 2 == 0 and (v[0] + v[1]) % 2 == 0

        if admissible(x) and admissible(y) and x != y:
            assert qta_degree_from_QTA(*x) != qta_degree_from_QTA(*y)


class TestRendering:
    def test_canonical_text(self):
        r = RatFunc(ONE + A + mono(1, eq=1, et=-1), 2)
        assert render_ratfunc(r) == "(1 + a + q*t^-1) / (1-q)^2"

    def test_poly_only(self):
        assert render_poly(Q + T) == "t + q"
        assert render_poly(LaurentPoly.zero()) == "0"

    def test_json_roundtrip_ratfunc(self):
        r = RatFunc(ONE + A + mono(-2, eq=1, et=-1), 2)
        assert ratfunc_from_json(ratfunc_to_json(r)) == r
        payload = json.loads(ratfunc_to_json(r))
        assert payload["denom_pow"] == 2
        assert all(isinstance(t["c"], str) for t in payload["num"])

    def test_json_roundtrip_table(self):
        t = GradedTable.build({(0, 0, 0): 1, (2, -1, 1): 3}, 4)
        assert table_from_json(table_to_json(t)) == t
