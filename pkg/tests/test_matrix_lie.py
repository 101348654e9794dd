"""Tests for Cartan pairs, Lie triple systems and the su -> so embedding."""

import random

import pytest
import sympy as sp

from algebra.matrix_lie import (
    BilinearForm,
    bracket,
    build_bdi_pair,
    check_cartan_pair,
    ci_subspaces,
    complex_line_kind,
    diii_subspaces,
    elementary,
    is_J_stable,
    is_lie_triple_system,
    isotropy_check,
    quadric_pair,
    random_j_stable_subspace,
    rotation,
    so3_generators,
    so3_triple_system,
    span_contains,
    span_rank,
    split_symmetric_form,
    su_basis,
    su_bracket,
    su_to_so,
    symplectic_form,
    unit_vector,
)
from utils.errors import ParameterError


class TestCartanPair:
    @pytest.mark.parametrize("m", range(3, 9))
    def test_identities(self, m):
        flags = check_cartan_pair(build_bdi_pair(m))
        assert flags == {
            "kk_in_k": True,
            "kp_in_p": True,
            "pp_in_k": True,
            "J_squared": True,
            "J_equivariant": True,
        }

    @pytest.mark.parametrize("m", [3, 5, 8])
    def test_dimensions(self, m):
        pair = build_bdi_pair(m)
        assert len(pair.p_basis) == 2 * m
        assert len(pair.k_basis) == 1 + m * (m - 1) // 2
        assert span_rank(pair.k_basis + pair.p_basis) == (m + 2) * (m + 1) // 2

    def test_j_is_ad_of_the_so2_generator(self):
        pair = build_bdi_pair(4)
        k0 = rotation(6, 2, 1)
        for x in pair.p_basis:
            assert bracket(k0, x) == pair.apply_J(x)

    def test_small_m_rejected(self):
        with pytest.raises(ParameterError):
            build_bdi_pair(2)

    def test_vector_length(self):
        with pytest.raises(ParameterError):
            build_bdi_pair(3).vector([1, 0], [0, 0, 1])

    def test_coordinates_outside_p(self):
        pair = build_bdi_pair(3)
        with pytest.raises(ParameterError):
            pair.p_coordinates(rotation(5, 2, 1))


class TestLieTripleSystem:
    def test_sigma_subspace(self):
        basis, pair = so3_triple_system()
        assert is_lie_triple_system(basis, pair) == (True, None)
        assert is_J_stable(basis, pair)

    def test_sigma_bracket(self):
        x1, x2 = so3_generators()
        assert bracket(x1, x2) == elementary(4, 2, 1) - elementary(4, 1, 2)

    def test_real_line_not_j_stable(self):
        pair = quadric_pair(3)
        x = pair.vector([1, 0, 0], [0, 0, 0])
        y = pair.vector([0, 1, 0], [0, 0, 0])
        assert is_lie_triple_system([x, y], pair)[0]
        assert not is_J_stable([x, y], pair)

    def test_witness_for_failure(self):
        pair = quadric_pair(3)
        z = pair.vector([1, 0, 0], [0, 2, 0])
        holds, witness = is_lie_triple_system([z, pair.apply_J(z)], pair)
        assert not holds
        assert witness is not None

    def test_requires_p(self):
        pair = quadric_pair(3)
        with pytest.raises(ParameterError):
            is_lie_triple_system([pair.k_basis[0]], pair)

    def test_whole_p_is_a_triple_system(self):
        pair = quadric_pair(3)
        assert is_lie_triple_system(pair.p_basis, pair)[0]


class TestComplexLines:
    @pytest.mark.parametrize("xi,eta,kind", [
        ([1, 0, 0], [0, 0, 0], "conic"),
        ([1, 2, 0], [2, 4, 0], "conic"),
        ([1, 0, 0], [0, 1, 0], "projective_line"),
        ([1, 1, 0], [1, -1, 0], "projective_line"),
        ([1, 0, 0], [0, 2, 0], None),
        ([1, 1, 0], [0, 1, 0], None),
    ])
    def test_kind(self, xi, eta, kind):
        assert complex_line_kind(xi, eta) == kind

    @pytest.mark.parametrize("m", [3, 4])
    def test_kind_matches_triple_system(self, m):
        pair = build_bdi_pair(m)
        rng = random.Random(7 + m)
        for _ in range(5):
            basis = random_j_stable_subspace(pair, 1, rng)
            coords = pair.p_coordinates(basis[0])
            assert is_J_stable(basis, pair)
            holds, _ = is_lie_triple_system(basis, pair)
            assert holds == (complex_line_kind(coords[:m], coords[m:]) is not None)

    def test_isotropic_line_is_triple_system(self):
        pair = build_bdi_pair(3)
        z = pair.vector([1, 0, 0], [0, 1, 0])
        assert is_lie_triple_system([z, pair.apply_J(z)], pair)[0]

    def test_random_subspace_dimension(self):
        pair = build_bdi_pair(5)
        basis = random_j_stable_subspace(pair, 2, random.Random(1))
        assert len(basis) == 4 and span_rank(basis) == 4
        assert is_J_stable(basis, pair)


class TestSuEmbedding:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_bracket_preserved(self, n):
        basis = su_basis(n)
        for x in basis:
            for y in basis:
                assert su_to_so(*su_bracket(x, y)) == bracket(su_to_so(*x), su_to_so(*y))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_injective(self, n):
        images = [su_to_so(*x) for x in su_basis(n)]
        assert len(images) == n * n + 2 * n
        assert span_rank(images) == n * n + 2 * n
        assert all(m.T == -m for m in images)

    def test_image_lands_in_unitary_commutant(self):
        # [[A, B], [-B, A]] commutes with the complex structure [[0, I], [-I, 0]]
        j = sp.Matrix([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
        for x in su_basis(1):
            image = su_to_so(*x)
            assert image * j == j * image

    def test_rejects_non_skew_hermitian(self):
        a = sp.ImmutableMatrix([[1, 0], [0, -1]])
        zero = sp.ImmutableMatrix(sp.zeros(2))
        with pytest.raises(ParameterError):
            su_to_so(a, zero)

    def test_rejects_trace(self):
        zero = sp.ImmutableMatrix(sp.zeros(2))
        with pytest.raises(ParameterError):
            su_to_so(zero, sp.ImmutableMatrix(sp.eye(2)))


class TestIsotropicSubspaces:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_ci(self, n):
        v1, v2 = ci_subspaces(n)
        omega = symplectic_form(n)
        assert isotropy_check(v1, omega) and isotropy_check(v2, omega)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_diii(self, n):
        v1, v2 = diii_subspaces(n)
        split = split_symmetric_form(n)
        assert isotropy_check(v1, split) and isotropy_check(v2, split)

    def test_dual_pair_not_isotropic(self):
        assert not isotropy_check([unit_vector(4, 1), unit_vector(4, 3)], split_symmetric_form(2))

    def test_form_validation(self):
        with pytest.raises(ParameterError):
            BilinearForm(matrix=[[0, 1], [1, 0]], kind="skew")
        with pytest.raises(ParameterError):
            BilinearForm(matrix=[[1, 0], [0, 0]], kind="symmetric")

    def test_span_contains(self):
        assert span_contains([rotation(3, 2, 1)], 3 * rotation(3, 2, 1))
        assert not span_contains([rotation(3, 2, 1)], rotation(3, 3, 1))
