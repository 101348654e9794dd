"""Tests for the Weyl dimension formula and bounded irrep enumeration."""

from math import comb

import pytest

from algebra.rep_theory import (
    DominantWeight,
    enumerate_irreps_below,
    frontier_weights,
    fundamental_dimensions,
    iter_weights,
    prop31_admissible,
    prop31_gates,
    prop31_trivial_summand,
    symmetric_power_dimension,
    tableau_dimension_oracle,
    weyl_dimension,
)
from algebra.root_system import RootSystemFactory
from utils.errors import ParameterError, UnsupportedOperationError


class TestWeylDimension:
    @pytest.mark.parametrize("rank", range(1, 9))
    def test_fundamental_binomial(self, rank):
        rs = RootSystemFactory.get("A", rank)
        assert fundamental_dimensions(rs) == {i: comb(rank + 1, i) for i in range(1, rank + 1)}

    def test_standard_module_of_a5(self):
        assert weyl_dimension(RootSystemFactory.get("A", 5), (1, 0, 0, 0, 0)) == 6

    def test_adjoint_of_a3(self):
        assert weyl_dimension(RootSystemFactory.get("A", 3), (1, 0, 1)) == 15

    def test_trivial(self):
        assert weyl_dimension(RootSystemFactory.get("E6", 6), DominantWeight.zero(6)) == 1

    @pytest.mark.parametrize("type_label,rank,weight,expected", [
        ("B", 2, (0, 1), 4),
        ("B", 2, (1, 0), 5),
        ("C", 3, (1, 0, 0), 6),
        ("D", 4, (1, 0, 0, 0), 8),
        ("D", 4, (0, 0, 0, 1), 8),
        ("D", 5, (0, 0, 0, 0, 1), 16),
        ("E6", 6, (1, 0, 0, 0, 0, 0), 27),
        ("E7", 7, (0, 0, 0, 0, 0, 0, 1), 56),
        ("E7", 7, (1, 0, 0, 0, 0, 0, 0), 133),
    ])
    def test_other_types(self, type_label, rank, weight, expected):
        assert weyl_dimension(RootSystemFactory.get(type_label, rank), weight) == expected

    def test_symmetric_powers(self):
        rs = RootSystemFactory.get("A", 4)
        for m in range(5):
            assert weyl_dimension(rs, (m, 0, 0, 0)) == symmetric_power_dimension(4, m) == comb(4 + m, m)

    def test_length_mismatch(self):
        with pytest.raises(ParameterError):
            weyl_dimension(RootSystemFactory.get("A", 3), (1, 0))

    def test_negative_coefficient(self):
        with pytest.raises(ParameterError):
            DominantWeight((1, -1))


class TestTableauOracle:
    def test_lambda1_plus_lambda2_rank4(self):
        assert tableau_dimension_oracle(4, (1, 1, 0, 0)) == 40

    @pytest.mark.parametrize("rank", range(1, 7))
    def test_agrees_with_weyl(self, rank):
        rs = RootSystemFactory.get("A", rank)
        for weight in iter_weights(rank, 3):
            assert weyl_dimension(rs, weight) == tableau_dimension_oracle(rank, weight)

    def test_type_a_only(self):
        with pytest.raises(UnsupportedOperationError):
            tableau_dimension_oracle(3, (1, 0, 0), type_label="B")

    def test_iter_weights_count(self):
        # weights of A_3 with sum <= 2: 1 + 3 + 6
        assert len(list(iter_weights(3, 2))) == 10


class TestMonotone:
    @pytest.mark.parametrize("rank", [2, 4, 6])
    def test_raising_increases(self, rank):
        rs = RootSystemFactory.get("A", rank)
        for weight in iter_weights(rank, 2):
            base = weyl_dimension(rs, weight)
            for i in range(rank):
                assert weyl_dimension(rs, weight.raised(i)) > base


class TestEnumerateIrreps:
    @pytest.mark.parametrize("rank", range(5, 9))
    def test_below_2l_plus_2(self, rank):
        rs = RootSystemFactory.get("A", rank)
        found = {(rec.weight.coeffs, rec.dimension) for rec in enumerate_irreps_below(rs, 2 * (rank + 1))}
        assert found == {
            ((0,) * rank, 1),
            (DominantWeight.fundamental(rank, 1).coeffs, rank + 1),
            (DominantWeight.fundamental(rank, rank).coeffs, rank + 1),
        }

    def test_small_rank_includes_lambda2(self):
        rs = RootSystemFactory.get("A", 3)
        dims = sorted(rec.dimension for rec in enumerate_irreps_below(rs, 2 * 4))
        assert dims == [1, 4, 4, 6]

    def test_sorted(self):
        records = enumerate_irreps_below(RootSystemFactory.get("A", 2), 10)
        keys = [(rec.dimension, rec.weight.coeffs) for rec in records]
        assert keys == sorted(keys)
        assert [rec.dimension for rec in records] == [1, 3, 3, 6, 6, 8, 10, 10]

    def test_zero_bound(self):
        assert enumerate_irreps_below(RootSystemFactory.get("A", 2), 0) == []

    def test_frontier_exceeds_bound(self):
        rs = RootSystemFactory.get("A", 4)
        records = enumerate_irreps_below(rs, 12)
        frontier = frontier_weights(rs, records)
        assert frontier
        assert all(weyl_dimension(rs, w) > 12 for w in frontier)


class TestTrivialSummand:
    @pytest.mark.parametrize("rank,d,expected", [(5, 8, 2), (6, 13, 6), (4, 7, 2), (4, 6, 1), (5, 11, 5)])
    def test_values(self, rank, d, expected):
        result = prop31_trivial_summand(rank, d)
        assert result.trivial_summand == expected
        assert result.trivial_summand >= result.bound == d - rank - 1

    def test_gates(self):
        assert prop31_gates(4, 7) == ["l>=4, l+1<d<2l"]
        assert prop31_gates(5, 11) == ["l>=5, l+1<d<2(l+1)"]
        assert prop31_gates(5, 8) == ["l>=4, l+1<d<2l", "l>=5, l+1<d<2(l+1)"]

    @pytest.mark.parametrize("rank,d", [(3, 5), (4, 8), (5, 12), (6, 7)])
    def test_outside_hypotheses(self, rank, d):
        with pytest.raises(ParameterError):
            prop31_trivial_summand(rank, d)

    def test_every_admissible_pair(self):
        pairs = prop31_admissible(8)
        assert (4, 6) in pairs and (8, 17) in pairs
        for rank, d in pairs:
            assert prop31_trivial_summand(rank, d).trivial_summand >= d - rank - 1
