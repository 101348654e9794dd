"""Verification suite for the Weyl dimension formula and bounded irrep enumeration."""

from math import comb
from typing import List

from algebra.rep_theory import (
    DominantWeight,
    enumerate_irreps_below,
    frontier_weights,
    iter_weights,
    prop31_admissible,
    prop31_trivial_summand,
    symmetric_power_dimension,
    tableau_dimension_oracle,
    weyl_dimension,
)
from algebra.root_system import RootSystemFactory
from checks.base_suite import BaseSuite, Check, all_hold
from config.settings import sweep_bound


class RepTheorySuite(BaseSuite):
    """Weyl formula against the tableau oracle, monotonicity and trivial summands."""

    def __init__(self):
        super().__init__("rep_theory")

    def get_checks(self) -> List[Check]:
        fundamental_rank = sweep_bound("weyl_fundamental_rank")
        tableau_rank = sweep_bound("tableau_rank")
        weight_sum = sweep_bound("tableau_weight_sum")
        prop_rank = sweep_bound("prop31_max_rank")
        a_weights = [(l, w) for l in range(1, tableau_rank + 1) for w in iter_weights(l, weight_sum)]
        return [
            self.check("fundamental_binomial", "deg lambda_i = binomial(l+1, i) for A_l",
                       lambda: all_hold(
                           [(l, i) for l in range(1, fundamental_rank + 1) for i in range(1, l + 1)],
                           lambda li: weyl_dimension(RootSystemFactory.get("A", li[0]),
                                                     DominantWeight.fundamental(li[0], li[1]))
                           == comb(li[0] + 1, li[1]))),
            self.check("tableau_oracle", "Weyl formula equals the hook-content count on A_l",
                       lambda: all_hold(a_weights, lambda lw: weyl_dimension(RootSystemFactory.get("A", lw[0]), lw[1])
                                        == tableau_dimension_oracle(lw[0], lw[1]))),
            self.check("monotone", "raising any m_i strictly increases the dimension",
                       lambda: all_hold(a_weights, self._monotone_at)),
            self.check("symmetric_powers", "deg(m lambda_1) = binomial(l+m, m)",
                       lambda: all_hold(
                           [(l, m) for l in range(1, tableau_rank + 1) for m in range(0, weight_sum + 1)],
                           lambda lm: weyl_dimension(RootSystemFactory.get("A", lm[0]),
                                                     (lm[1],) + (0,) * (lm[0] - 1))
                           == symmetric_power_dimension(*lm))),
            self.check("irreps_below_2l2", "below 2(l+1) only the trivial, lambda_1 and lambda_l modules exist",
                       lambda: all_hold(range(5, max(prop_rank, 5) + 1), self._below_bound_holds)),
            self.check("frontier_audit", "every weight above the enumerated set exceeds the bound",
                       lambda: all_hold(
                           [(l, b) for l in range(1, 6) for b in (1, 2 * (l + 1), 3 * (l + 1))],
                           self._frontier_holds)),
            self.check("trivial_summand_bound", "a d-dimensional module has a trivial summand r >= d - l - 1",
                       lambda: all_hold(prop31_admissible(prop_rank),
                                        lambda ld: prop31_trivial_summand(*ld).trivial_summand >= ld[1] - ld[0] - 1)),
        ]

    @staticmethod
    def _monotone_at(case) -> bool:
        rank, weight = case
        rs = RootSystemFactory.get("A", rank)
        base = weyl_dimension(rs, weight)
        return all(weyl_dimension(rs, weight.raised(i)) > base for i in range(rank))

    @staticmethod
    def _below_bound_holds(rank: int) -> bool:
        rs = RootSystemFactory.get("A", rank)
        found = {(rec.weight.coeffs, rec.dimension) for rec in enumerate_irreps_below(rs, 2 * (rank + 1))}
        expected = {
            (DominantWeight.zero(rank).coeffs, 1),
            (DominantWeight.fundamental(rank, 1).coeffs, rank + 1),
            (DominantWeight.fundamental(rank, rank).coeffs, rank + 1),
        }
        return found == expected

    @staticmethod
    def _frontier_holds(case) -> bool:
        rank, bound = case
        rs = RootSystemFactory.get("A", rank)
        records = enumerate_irreps_below(rs, bound)
        return all(weyl_dimension(rs, w) > bound for w in frontier_weights(rs, records))
