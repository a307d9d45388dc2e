import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from math import gcd

from torushom.algebra import LaurentPoly, RatFunc, series_truncate
from torushom.curves import (
    GammaModule,
    HILB,
    JACOBIAN,
    cell_dimension,
    enumerate_hilb_ideals,
    enumerate_jacobian_modules,
    euler_compare,
    hilb_level_poincare,
    hilb_poincare_series,
    jacobian_cells,
    jacobian_poincare,
    lattice_path_count,
    node_euler,
    node_hilb,
    ors_compare,
    rational_catalan,
    semigroup,
)


coprime_pairs = st.tuples(st.integers(1, 7), st.integers(1, 7)).filter(
    lambda p: gcd(*p) == 1 and p[0] + p[1] <= 12
)


class TestSemigroup:
    def test_cusp(self):
        s = semigroup(2, 3)
        assert s.gaps == (1,)
        assert s.conductor == 2
        assert s.delta == 1

    def test_2_5(self):
        s = semigroup(2, 5)
        assert s.gaps == (1, 3)
        assert s.conductor == 4
        assert s.delta == 2

    def test_3_4(self):
        s = semigroup(3, 4)
        assert s.gaps == (1, 2, 5)
        assert s.conductor == 6
        assert s.delta == 3

    def test_non_coprime_rejected(self):
        with pytest.raises(ValueError, match="coprime"):
            semigroup(2, 4)

    @given(coprime_pairs)
    def test_membership_definition(self, pair):
        m, n = pair
        s = semigroup(m, n)
        members = {a * m + b * n for a in range(n + 2) for b in range(m + 2)}
        for j in range(s.conductor + 3):
            assert s.member(j) == (j in members)
        assert len(s.gaps) == s.delta


class TestCatalanCounts:
    def test_values(self):
        assert rational_catalan(2, 3) == 2
        assert rational_catalan(3, 4) == 5
        assert rational_catalan(1, 7) == 1

    def test_lattice_paths(self):
        assert lattice_path_count(3, 4) == 5
        assert lattice_path_count(2, 3) == 2
        assert lattice_path_count(1, 5) == 1

    def test_non_coprime_rejected(self):
        with pytest.raises(ValueError):
            rational_catalan(2, 4)

    @given(coprime_pairs)
    def test_triple_equality(self, pair):
        m, n = pair
        assert (
            len(enumerate_jacobian_modules(m, n))
            == rational_catalan(m, n)
            == lattice_path_count(m, n)
        )


class TestModuleEnumeration:
    def test_cusp_modules(self):
        mods = enumerate_jacobian_modules(2, 3)
        assert len(mods) == 2
        gen_sets = sorted(m.minimal_generators() for m in mods)
        assert gen_sets == [(0,), (0, 1)]

    def test_3_4_modules_match_displayed_families(self):
        mods = enumerate_jacobian_modules(3, 4)
        gen_sets = sorted(m.minimal_generators() for m in mods)
        assert gen_sets == [(0,), (0, 1), (0, 1, 2), (0, 2), (0, 5)]

    def test_2_5_modules(self):
        assert len(enumerate_jacobian_modules(2, 5)) == 3

    @given(coprime_pairs)
    def test_closure_and_conductor_tail(self, pair):
        m, n = pair
        for mod in enumerate_jacobian_modules(m, n):
            for j in range(mod.span):
                if mod.member(j):
                    assert mod.member(j + m) and mod.member(j + n)
            assert all(mod.member(j) for j in range(mod.sem.conductor, mod.span + 3))

    def test_hilb_colength_zero(self):
        mods = enumerate_hilb_ideals(2, 3, 0)
        assert len(mods) == 1
        assert mods[0].colength() == 0

    def test_hilb_colength_one(self):
        mods = enumerate_hilb_ideals(2, 3, 1)
        assert len(mods) == 1
        assert mods[0].minimal_generators() == (2, 3)

    def test_hilb_colength_two(self):
        mods = enumerate_hilb_ideals(2, 3, 2)
        assert len(mods) == 2
        gens = sorted(m.minimal_generators() for m in mods)
        assert gens == [(2,), (3, 4)]

    @given(coprime_pairs, st.integers(0, 5))
    @settings(deadline=None)
    def test_hilb_colength_bookkeeping(self, pair, k):
        m, n = pair
        for mod in enumerate_hilb_ideals(m, n, k):
            assert mod.colength() == k

    def test_cusp_family_levels(self):
        # principal family (t^k + lambda t^{k+1}) has order set k + Gamma and
        # colength k; the 2-generated family (t^k, t^{k+1}) has colength k-1
        s = semigroup(2, 3)
        for k in range(2, 7):
            span = k + 2 + max(2, 3)
            principal = GammaModule(
                s, HILB, tuple(j >= k and j != k + 1 for j in range(span))
            )
            two_gen = GammaModule(s, HILB, tuple(j >= k for j in range(span)))
            assert principal.colength() == k
            assert two_gen.colength() == k - 1
            assert principal in enumerate_hilb_ideals(2, 3, k)
            assert two_gen in enumerate_hilb_ideals(2, 3, k - 1)

    def test_mode_validation(self):
        s = semigroup(2, 3)
        with pytest.raises(ValueError, match="closed"):
            GammaModule(s, JACOBIAN, (True, True, False, True, True))
        with pytest.raises(ValueError, match="contain 0"):
            GammaModule(s, JACOBIAN, (False, False, True, True, True))
        with pytest.raises(ValueError, match="inside the semigroup"):
            GammaModule(s, HILB, (True, True, True, True, True))


class TestCellDimensions:
    def test_jacobian_3_4_full_semigroup_cell(self):
        mods = enumerate_jacobian_modules(3, 4)
        by_gens = {m.minimal_generators(): m for m in mods}
        cell = cell_dimension(by_gens[(0,)])
        assert cell.dimension == 3
        assert [h for (_, h) in cell.parameters] == [1, 2, 5]

    def test_jacobian_3_4_fourth_family(self):
        mods = enumerate_jacobian_modules(3, 4)
        by_gens = {m.minimal_generators(): m for m in mods}
        assert cell_dimension(by_gens[(0, 1)]).dimension == 2

    def test_hilb_cusp_colength_two_cell(self):
        mods = enumerate_hilb_ideals(2, 3, 2)
        by_gens = {m.minimal_generators(): m for m in mods}
        cell = cell_dimension(by_gens[(2,)])
        assert cell.dimension == 1
        assert cell.parameters == ((2, 3),)

    def test_jacobian_cell_tables(self):
        assert sorted(c.dimension for c in jacobian_cells(2, 3)) == [0, 1]
        assert sorted(c.dimension for c in jacobian_cells(2, 5)) == [0, 1, 2]
        assert sorted(c.dimension for c in jacobian_cells(3, 4)) == [0, 1, 2, 2, 3]

    @pytest.mark.parametrize("m,n", [(2, 3), (2, 5), (2, 7), (3, 4)])
    def test_max_dimension_and_cell_count(self, m, n):
        cells = jacobian_cells(m, n)
        assert max(c.dimension for c in cells) == semigroup(m, n).delta
        assert len(cells) == rational_catalan(m, n)

    def test_cell_json(self):
        import json

        cell = jacobian_cells(2, 3)[0]
        data = json.loads(cell.to_json())
        assert set(data) == {"delta_bits", "generators", "dimension"}
        assert set(data["delta_bits"]) <= {"0", "1"}


class TestSeries:
    def test_cusp_series(self):
        expected = series_truncate(
            RatFunc.of(LaurentPoly({(0, 0, 0): 1, (0, 2, 2): 1}), 1), 4
        )
        assert hilb_poincare_series(2, 3, 4) == expected

    def test_2_5_series(self):
        num = LaurentPoly({(0, 2 * i, 2 * i): 1 for i in range(3)})
        expected = series_truncate(RatFunc.of(num, 1), 5)
        assert hilb_poincare_series(2, 5, 5) == expected

    def test_series_kmax_zero(self):
        assert hilb_poincare_series(3, 4, 0).as_dict() == {(0, 0, 0): 1}

    def test_node_table(self):
        assert node_hilb(3).as_dict() == {
            (0, 0, 0): 1,
            (1, 0, 0): 1,
            (2, 0, 0): 1,
            (2, 2, 0): 1,
            (3, 0, 0): 1,
            (3, 2, 0): 2,
        }

    def test_node_euler(self):
        assert node_euler(3) == {0: 1, 1: 1, 2: 2, 3: 3}

    def test_node_kmax_zero(self):
        assert node_hilb(0).as_dict() == {(0, 0, 0): 1}

    @pytest.mark.parametrize("m,n", [(2, 3), (2, 5), (2, 7), (3, 4)])
    def test_stabilization(self, m, n):
        delta = semigroup(m, n).delta
        stable = hilb_level_poincare(m, n, 2 * delta)
        assert stable == hilb_level_poincare(m, n, 2 * delta + 1)
        assert stable == jacobian_poincare(m, n)


class TestComparisons:
    @pytest.mark.parametrize("m,n,kmax", [(2, 3, 6), (2, 5, 8), (3, 4, 10)])
    def test_ors_match(self, m, n, kmax):
        report = ors_compare(m, n, kmax)
        assert report.success
        assert report.ratio == (0, 0, 0)

    @pytest.mark.parametrize("m,n", [(2, 3), (2, 5), (2, 7), (3, 4)])
    def test_euler_match(self, m, n):
        ok, ratio = euler_compare(m, n, 8)
        assert ok and ratio == (0, 0, 0)
