"""Tests for root systems, parabolic splits and Dynkin subdiagrams."""

from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

import pytest

from algebra.root_system import (
    EIII_INVOLUTION,
    Root,
    RootSystemFactory,
    cartan_involution_stable,
    cartan_matrix,
    classical_positive_root_count,
    classify_cartan,
    coroot_pairing,
    delete_vertices,
    hermitian_marked_roots,
    induced_cartan,
    is_diagram_automorphism,
    is_reflection_closed,
    parabolic_split,
    positive_roots_from_cartan,
    root_lengths,
)
from utils.errors import ParameterError


class TestCartanMatrix:
    def test_b2_short_root_is_last(self):
        assert cartan_matrix("B", 2) == ((2, -2), (-1, 2))

    def test_c2_long_root_is_last(self):
        assert cartan_matrix("C", 2) == ((2, -1), (-2, 2))

    def test_d4_branch(self):
        c = cartan_matrix("D", 4)
        assert [c[1][j] for j in range(4)] == [-1, 2, -1, -1]

    def test_e6_alpha2_attached_to_alpha4(self):
        c = cartan_matrix("E6", 6)
        assert c[1][3] == -1
        assert [j + 1 for j in range(6) if j != 1 and c[1][j]] == [4]

    def test_root_lengths_b3(self):
        lengths = root_lengths(cartan_matrix("B", 3))
        assert lengths[0] == lengths[1] == 2 * lengths[2]

    @pytest.mark.parametrize("type_label,rank", [("A", 0), ("B", 1), ("C", 1), ("D", 2), ("E6", 7), ("F", 4), ("G", 2)])
    def test_unsupported(self, type_label, rank):
        with pytest.raises(ParameterError):
            cartan_matrix(type_label, rank)


class TestPositiveRoots:
    @pytest.mark.parametrize("type_label,rank,count", [
        ("A", 1, 1), ("A", 5, 15), ("B", 3, 9), ("C", 4, 16), ("D", 4, 12), ("D", 5, 20), ("E6", 6, 36), ("E7", 7, 63),
    ])
    def test_counts(self, type_label, rank, count):
        rs = RootSystemFactory.get(type_label, rank)
        assert len(rs.positive_roots) == count == classical_positive_root_count(type_label, rank)

    def test_sorted_by_height(self):
        rs = RootSystemFactory.get("E7", 7)
        heights = [root.height for root in rs.positive_roots]
        assert heights == sorted(heights)
        assert rs.positive_roots[-1].coeffs == (2, 2, 3, 4, 3, 2, 1)

    def test_e6_highest_root(self):
        rs = RootSystemFactory.get("E6", 6)
        assert rs.positive_roots[-1].coeffs == (1, 2, 2, 3, 2, 1)

    def test_simple_roots_included(self):
        rs = RootSystemFactory.get("C", 3)
        for i in range(1, 4):
            assert rs.simple_root(i) in rs.positive_roots

    @pytest.mark.parametrize("type_label,rank", [("A", 4), ("B", 4), ("C", 3), ("D", 5), ("E6", 6)])
    def test_reflection_closed(self, type_label, rank):
        assert is_reflection_closed(RootSystemFactory.get(type_label, rank))

    def test_simple_root_out_of_range(self):
        with pytest.raises(ParameterError):
            RootSystemFactory.get("A", 3).simple_root(4)

    def test_factory_cache(self, fresh_factory):
        first = fresh_factory.get("D", 4)
        assert fresh_factory.get("D", 4) is first
        fresh_factory.clear_cache()
        assert fresh_factory.get("D", 4) is not first

    def test_factory_concurrent_get(self, fresh_factory):
        with ThreadPoolExecutor(max_workers=6) as pool:
            built = list(pool.map(lambda _: fresh_factory.get("E7", 7), range(12)))
        assert all(rs is built[0] for rs in built)


class TestParabolicSplit:
    @pytest.mark.parametrize("rank", range(1, 9))
    def test_a_type_dimension(self, rank):
        rs = RootSystemFactory.get("A", rank)
        for r in range(1, rank + 1):
            assert parabolic_split(rs, r).complex_dimension == r * (rank + 1 - r)

    def test_e6_alpha1(self):
        assert parabolic_split(RootSystemFactory.get("E6", 6), 1).complex_dimension == 16

    def test_e7_alpha7(self):
        assert parabolic_split(RootSystemFactory.get("E7", 7), 7).complex_dimension == 27

    def test_partition(self):
        rs = RootSystemFactory.get("D", 5)
        split = parabolic_split(rs, 5)
        assert not set(split.phi_1) & set(split.phi_n_plus)
        assert set(split.phi_1) | set(split.phi_n_plus) == set(rs.positive_roots)

    def test_hermitian_closed_forms(self):
        for kind, type_label, rank, marked, expected in hermitian_marked_roots(6):
            split = parabolic_split(RootSystemFactory.get(type_label, rank), marked)
            assert split.complex_dimension == expected, (kind, type_label, rank)

    def test_marked_out_of_range(self):
        with pytest.raises(ParameterError):
            parabolic_split(RootSystemFactory.get("A", 3), 0)

    def test_to_dict_shape(self):
        data = parabolic_split(RootSystemFactory.get("A", 2), 1).to_dict()
        assert data["complex_dimension"] == 2
        assert data["phi_1"] == [[0, 1]]


class TestCorootPairing:
    def test_delta_is_one_on_simple_roots(self):
        for type_label, rank in (("B", 3), ("C", 3), ("E6", 6)):
            rs = RootSystemFactory.get(type_label, rank)
            for i in range(1, rank + 1):
                assert coroot_pairing(rs, (0,) * rank, rs.simple_root(i)) == 1

    def test_a_type_formula(self):
        rs = RootSystemFactory.get("A", 4)
        weight = (2, 0, 1, 3)
        root = Root((0, 1, 1, 1))
        assert coroot_pairing(rs, weight, root) == 0 + 1 + 3 + 3

    def test_without_delta(self):
        rs = RootSystemFactory.get("A", 3)
        assert coroot_pairing(rs, (1, 0, 0), Root((1, 1, 0)), include_delta=False) == 1

    def test_b2_long_root(self):
        rs = RootSystemFactory.get("B", 2)
        # alpha_1 + 2 alpha_2 is long, its coroot is alpha_1^vee + alpha_2^vee
        assert coroot_pairing(rs, (0, 0), Root((1, 2))) == 2

    def test_length_mismatch(self):
        rs = RootSystemFactory.get("A", 3)
        with pytest.raises(ParameterError):
            coroot_pairing(rs, (1, 0), rs.simple_root(1))


class TestSubdiagrams:
    def test_e6_minus_alpha2(self):
        assert delete_vertices(RootSystemFactory.get("E6", 6), {2}) == [("A", 5)]

    def test_e7_minus_alpha2(self):
        assert delete_vertices(RootSystemFactory.get("E7", 7), {2}) == [("A", 6)]

    def test_e6_minus_alpha1(self):
        assert delete_vertices(RootSystemFactory.get("E6", 6), {1}) == [("D", 5)]

    def test_e7_minus_alpha7(self):
        assert delete_vertices(RootSystemFactory.get("E7", 7), {7}) == [("E6", 6)]

    def test_two_components(self):
        assert delete_vertices(RootSystemFactory.get("A", 5), {3}) == [("A", 2), ("A", 2)]

    def test_every_e6_subset_matches_root_count(self):
        rs = RootSystemFactory.get("E6", 6)
        for size in range(1, 6):
            for removed in combinations(range(1, 7), size):
                kept = [i for i in range(1, 7) if i not in removed]
                components = delete_vertices(rs, removed)
                expected = sum(classical_positive_root_count(t, r) for t, r in components)
                assert len(positive_roots_from_cartan(induced_cartan(rs, kept))) == expected

    def test_classify_b_and_c(self):
        assert classify_cartan(cartan_matrix("B", 4)) == ("B", 4)
        assert classify_cartan(cartan_matrix("C", 4)) == ("C", 4)

    def test_bad_vertex(self):
        with pytest.raises(ParameterError):
            delete_vertices(RootSystemFactory.get("A", 3), {5})


class TestEIIIInvolution:
    def test_is_automorphism(self):
        assert is_diagram_automorphism(RootSystemFactory.get("E6", 6), EIII_INVOLUTION)

    def test_not_an_automorphism_of_e7(self):
        assert not is_diagram_automorphism(RootSystemFactory.get("E7", 7), EIII_INVOLUTION)

    def test_a5_stable(self):
        assert cartan_involution_stable()
