"""Verification suite for Cartan pairs, Lie triple systems and the su -> so embedding."""

import random
from typing import List

from algebra.matrix_lie import (
    bracket,
    build_bdi_pair,
    check_cartan_pair,
    ci_subspaces,
    complex_line_kind,
    diii_subspaces,
    is_J_stable,
    is_lie_triple_system,
    isotropy_check,
    random_j_stable_subspace,
    rotation,
    so3_generators,
    so3_triple_system,
    span_rank,
    split_symmetric_form,
    su_basis,
    su_bracket,
    su_to_so,
    symplectic_form,
    unit_vector,
)
from checks.base_suite import BaseSuite, Check, all_hold
from config.settings import RANDOM_SEED, sweep_bound


class MatrixLieSuite(BaseSuite):
    """Exact bracket identities for so(m+2), su(n+1) and the isotropic subspaces."""

    def __init__(self):
        super().__init__("matrix_lie")

    def get_checks(self) -> List[Check]:
        max_m = sweep_bound("bdi_pair_max_m")
        max_su = sweep_bound("su_max_n")
        return [
            self.check("bdi_pair_identities", "[k,p] in p, [p,p] in k, J^2 = -1 and J commutes with ad k",
                       lambda: all_hold(range(3, max_m + 1), lambda m: all(check_cartan_pair(build_bdi_pair(m)).values()))),
            self.check("bdi_pair_dimensions", "dim p = 2m and dim k = 1 + m(m-1)/2",
                       lambda: all_hold(range(3, max_m + 1), self._dimensions_hold)),
            self.check("sigma_triple_system", "m(sigma) in so(4) is a Lie triple system",
                       lambda: (is_lie_triple_system(*so3_triple_system())[0], "span{X1, X2}")),
            self.check("sigma_j_stable", "m(sigma) in so(4) is J-stable",
                       lambda: (is_J_stable(*so3_triple_system()), "span{X1, X2}")),
            self.check("sigma_bracket", "[X1, X2] is the rotation E21 - E12",
                       lambda: (bracket(*so3_generators()) == rotation(4, 2, 1), "")),
            self.check("su_homomorphism", "su(n+1) -> so(2n+2) preserves brackets on a full basis",
                       lambda: all_hold(range(1, max_su + 1), self._homomorphism_holds)),
            self.check("su_injective", "the images of an su(n+1) basis are independent",
                       lambda: all_hold(range(1, max_su + 1),
                                        lambda n: span_rank([su_to_so(*x) for x in su_basis(n)]) == n * n + 2 * n)),
            self.check("isotropic_v1_v2", "V1 and V2 are isotropic for the symplectic and split forms",
                       lambda: all_hold(range(2, 5), self._isotropy_holds)),
            self.check("complex_lines", "complex lines of p are triple systems exactly for conics and isotropic lines",
                       lambda: all_hold(range(3, 6), self._random_lines_consistent)),
        ]

    @staticmethod
    def _dimensions_hold(m: int) -> bool:
        pair = build_bdi_pair(m)
        return (
            len(pair.p_basis) == 2 * m
            and len(pair.k_basis) == 1 + m * (m - 1) // 2
            and span_rank(pair.p_basis) == 2 * m
        )

    @staticmethod
    def _homomorphism_holds(n: int) -> bool:
        basis = su_basis(n)
        for i, x in enumerate(basis):
            for y in basis[i + 1:]:
                if su_to_so(*su_bracket(x, y)) != bracket(su_to_so(*x), su_to_so(*y)):
                    return False
        images = [su_to_so(*x) for x in basis]
        return all(m.T == -m for m in images)

    @staticmethod
    def _isotropy_holds(n: int) -> bool:
        ci_v1, ci_v2 = ci_subspaces(n)
        diii_v1, diii_v2 = diii_subspaces(n)
        omega, split = symplectic_form(n), split_symmetric_form(n)
        dual_pair = [unit_vector(2 * n, 1), unit_vector(2 * n, n + 1)]
        return (
            isotropy_check(ci_v1, omega)
            and isotropy_check(ci_v2, omega)
            and isotropy_check(diii_v1, split)
            and isotropy_check(diii_v2, split)
            and not isotropy_check(dual_pair, split)
        )

    @staticmethod
    def _random_lines_consistent(m: int) -> bool:
        rng = random.Random(RANDOM_SEED + m)
        pair = build_bdi_pair(m)
        for _ in range(4):
            basis = random_j_stable_subspace(pair, 1, rng)
            coords = pair.p_coordinates(basis[0])
            xi, eta = coords[:m], coords[m:]
            if not is_J_stable(basis, pair):
                return False
            holds, _ = is_lie_triple_system(basis, pair)
            if holds != (complex_line_kind(xi, eta) is not None):
                return False
        # one of each kind, built by hand
        e1, e2 = unit_vector(m, 1), unit_vector(m, 2)
        zero = [0] * m
        conic = [pair.vector(e1, zero), pair.vector(zero, e1)]
        isotropic = [pair.vector(e1, e2), pair.apply_J(pair.vector(e1, e2))]
        skew = [pair.vector(e1, [2 * x for x in e2]), pair.apply_J(pair.vector(e1, [2 * x for x in e2]))]
        return (
            is_lie_triple_system(conic, pair)[0]
            and is_lie_triple_system(isotropic, pair)[0]
            and not is_lie_triple_system(skew, pair)[0]
        )
