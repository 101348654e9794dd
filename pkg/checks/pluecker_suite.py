"""Verification suite for Pluecker degrees, quadric membership and isotropic extensions."""

from typing import List

from algebra.matrix_lie import (
    ci_subspaces,
    diii_subspaces,
    isotropy_check,
    split_symmetric_form,
    symplectic_form,
    unit_vector,
)
from checks.base_suite import BaseSuite, Check, all_hold
from config.settings import sweep_bound
from geometry.pluecker import (
    ci_degree_one_line,
    circle_on_line,
    curve_degree,
    geodesic_circle,
    grassmannian_line,
    hyperplane_witness,
    isotropic_pencil,
    lagrangian_extension,
    pencil_degree_split,
    pluecker_coords,
    pluecker_relations_hold,
    quadric_membership,
    reparametrize,
    row_transform,
    segre_line,
    so3_geodesics,
    veronese_conic,
)

_FORMS = {"CI": symplectic_form, "DIII": split_symmetric_form}


class PlueckerSuite(BaseSuite):
    """Degrees of the explicit curves and the no-hyperplane witnesses."""

    def __init__(self):
        super().__init__("pluecker")

    def get_checks(self) -> List[Check]:
        line_d = sweep_bound("line_family_d")
        max_n = sweep_bound("pencil_max_n")
        witness_n = sweep_bound("witness_max_n")
        pencils = [(kind, n) for kind in ("CI", "DIII") for n in range(2, max_n + 1)]
        return [
            self.check("line_family_degree", "the pencil of k-planes through a (k-1)-plane has degree 1",
                       lambda: all_hold(range(1, line_d + 1), lambda k: curve_degree(grassmannian_line(k, k + 2)) == 1)),
            self.check("geodesic_circle", "the circle <e_0, ..., c e_{k-1} + s e_k> runs along a degree-one line",
                       lambda: all_hold(range(1, line_d + 1), lambda k: circle_on_line(geodesic_circle(k, k + 2)))),
            self.check("segre_line", "the ruling line of Q_m lies on the quadric with degree 1",
                       lambda: all_hold(range(2, 6), self._segre_holds)),
            self.check("ci_line", "the CI degree-one line is isotropic of degree 1",
                       lambda: all_hold(range(2, max_n + 1), self._ci_line_holds)),
            self.check("veronese_conic", "the conic of m(sigma) lies on the quadric with degree 2",
                       self._conic),
            self.check("geodesic_circles", "the circles c1 and c2 lie on z0^2 + z1^2 + z2^2 = 0",
                       lambda: all_hold(sorted(so3_geodesics().items()),
                                        lambda item: quadric_membership(item[1])[0])),
            self.check("pencil_degree", "L -> L + (L^perp cap V2) restricted to a line has degree 2",
                       lambda: all_hold(pencils, lambda kn: curve_degree(isotropic_pencil(*kn)) == 2)),
            self.check("pencil_isotropic", "the extended pencil is isotropic identically in the parameter",
                       lambda: all_hold(pencils, lambda kn: isotropy_check(
                           isotropic_pencil(*kn).rows.tolist(), _FORMS[kn[0]](kn[1])))),
            self.check("pencil_split", "degree of W is 1 + 1",
                       lambda: all_hold(pencils, lambda kn: pencil_degree_split(*kn) == (1, 1, 2))),
            self.check("pencil_relations", "Pluecker vectors of the pencil satisfy the quadratic relations",
                       lambda: all_hold(pencils, self._relations_hold)),
            self.check("degree_invariance", "degree is unchanged by row operations and reparametrization",
                       lambda: all_hold(pencils, self._invariant)),
            self.check("lagrangian_extension", "W = L + (L^perp cap V2) is isotropic of dimension n",
                       lambda: all_hold(pencils, self._extension_holds)),
            self.check("hyperplane_witness", "no hyperplane of G(n, L + <v>) lies in the isotropic Grassmannian",
                       lambda: all_hold([(kind, n) for kind in ("CI", "DIII") for n in range(2, witness_n + 1)],
                                        self._witness_holds)),
        ]

    @staticmethod
    def _segre_holds(m: int) -> bool:
        s = segre_line(m)
        holds, degenerate = quadric_membership(list(s.rows.row(0)))
        return holds and not degenerate and curve_degree(s) == 1

    @staticmethod
    def _ci_line_holds(n: int) -> bool:
        s = ci_degree_one_line(n)
        return curve_degree(s) == 1 and isotropy_check(s.rows.tolist(), symplectic_form(n))

    @staticmethod
    def _conic():
        s = veronese_conic()
        holds, _ = quadric_membership(list(s.rows.row(0)))
        degree = curve_degree(s)
        return holds and degree == 2, f"degree {degree}"

    @staticmethod
    def _relations_hold(kind_n) -> bool:
        s = isotropic_pencil(*kind_n)
        return pluecker_relations_hold(pluecker_coords(s), s.k, s.N, limit=60)

    @staticmethod
    def _invariant(kind_n) -> bool:
        s = isotropic_pencil(*kind_n)
        k, fixed = s.k, s.k - 2
        # the first k-2 rows are constant, the last two move linearly
        shear = [[1 if i == j else (2 if j == i + 1 and i != fixed - 1 else 0) for j in range(k)] for i in range(k)]
        return (
            curve_degree(row_transform(s, shear)) == 2
            and curve_degree(reparametrize(s, [[1, 1], [0, 1]])) == 2
            and curve_degree(reparametrize(s, [[2, 0], [1, 3]])) == 2
        )

    @staticmethod
    def _extension_holds(kind_n) -> bool:
        kind, n = kind_n
        v1, v2 = ci_subspaces(n) if kind == "CI" else diii_subspaces(n)
        form = _FORMS[kind](n)
        W = lagrangian_extension(v1[: n - 1], form, v2)
        return len(W) == n and isotropy_check(W, form) and W[: n - 1] == [list(x) for x in v1[: n - 1]]

    @staticmethod
    def _witness_holds(kind_n) -> bool:
        kind, n = kind_n
        form = _FORMS[kind](n)
        if kind == "CI":
            L, _ = ci_subspaces(n)
            v = [a + b for a, b in zip(unit_vector(2 * n, 1), unit_vector(2 * n, n + 1))]
        else:
            L, _ = diii_subspaces(n)
            v = unit_vector(2 * n, n + 1)
        witness = hyperplane_witness(n, v, L, form)
        return len(witness.basis) == n and witness.basis[0] == v and not isotropy_check(witness.basis, form)
