"""Verification suite for Schubert dimensions and degrees."""

from typing import List

from algebra.root_system import RootSystemFactory, parabolic_split
from checks.base_suite import BaseSuite, Check, all_hold
from config.settings import sweep_bound
from geometry.schubert import (
    SchubertIndex,
    grassmannian_index,
    iter_indices,
    line_index_projective,
    line_index_vector,
    linear_index,
    pieri_degree_oracle,
    schubert_degree,
    schubert_dimension,
    vector_to_projective,
)


class SchubertSuite(BaseSuite):
    """Degree formula against the Pieri oracle and the linear families."""

    def __init__(self):
        super().__init__("schubert")

    def get_checks(self) -> List[Check]:
        max_d = sweep_bound("schubert_d")
        max_n = sweep_bound("schubert_n")
        linear_d = sweep_bound("schubert_linear_d")
        line_d = sweep_bound("line_family_d")
        ambients = [(d, n) for d in range(0, max_d + 1) for n in range(d + 1, max_n + 1)]
        return [
            self.check("pieri_oracle", "degree formula equals the iterated Pieri point coefficient",
                       lambda: all_hold(
                           [idx for d, n in ambients for idx in iter_indices(d, n)],
                           lambda idx: schubert_degree(idx) == pieri_degree_oracle(idx))),
            self.check("linear_family", "Omega(1, ..., d+1) has k = d+1 and degree 1",
                       lambda: all_hold(range(0, linear_d + 1),
                                        lambda d: schubert_dimension(linear_index(d, d + 1)) == d + 1
                                        and schubert_degree(linear_index(d, d + 1)) == 1)),
            self.check("gr13_degree", "Gr(1,3) is a quadric: degree 2",
                       lambda: self._value(schubert_degree(grassmannian_index(1, 3)), 2)),
            self.check("line_index", "both readings of the line index give a degree-one curve",
                       lambda: all_hold(range(1, line_d + 1), self._line_holds)),
            self.check("grassmannian_dimension", "dim Gr(d, n) equals |Phi(n+)| of (A_n, alpha_{d+1})",
                       lambda: all_hold(
                           ambients,
                           lambda dn: schubert_dimension(grassmannian_index(*dn))
                           == parabolic_split(RootSystemFactory.get("A", dn[1]), dn[0] + 1).complex_dimension)),
        ]

    @staticmethod
    def _value(value: int, expected: int):
        return value == expected, f"{value}"

    @staticmethod
    def _line_holds(d: int) -> bool:
        projective = line_index_projective(d, d + 2)
        converted = SchubertIndex(a=vector_to_projective(line_index_vector(d)), d=d, n=d + 2)
        return (
            projective == converted
            and schubert_dimension(projective) == 1
            and schubert_degree(projective) == 1
            and pieri_degree_oracle(projective) == 1
        )
