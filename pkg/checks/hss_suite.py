"""Verification suite for the Hermitian symmetric space catalog."""

from typing import List

from catalog.hss_catalog import (
    HermitianSpace,
    HSSKind,
    complex_dimension,
    iter_catalog,
    min_degree,
    projective_rank,
    rank_consistency_report,
    symmetric_pairs,
)
from checks.base_suite import BaseSuite, Check, all_hold
from config.settings import sweep_bound


def _closed_form_dimension(s: HermitianSpace) -> int:
    if s.kind == HSSKind.AIII:
        p, q = s.params
        return p * q
    if s.kind == HSSKind.BDI:
        return s.params[0]
    n = s.params[0] if s.params else 0
    if s.kind == HSSKind.CI:
        return n * (n + 1) // 2
    if s.kind == HSSKind.DIII:
        return n * (n - 1) // 2
    return 16 if s.kind == HSSKind.EIII else 27


def _expected_count(s: HermitianSpace) -> int:
    if s.kind == HSSKind.AIII:
        return min(s.params)
    if s.kind == HSSKind.BDI:
        return 2
    if s.kind == HSSKind.CI:
        return s.params[0]
    if s.kind == HSSKind.DIII:
        return s.params[0] // 2
    return 2


class HSSSuite(BaseSuite):
    """Projective ranks, pair counts, minimal degrees and the bootstrap identities."""

    def __init__(self):
        super().__init__("hss")

    def get_checks(self) -> List[Check]:
        max_d = sweep_bound("aiii_max_d")
        max_n = sweep_bound("aiii_max_n")
        grassmannians = [(d, n) for n in range(1, max_n + 1) for d in range(0, max_d + 1) if n <= 2 * d < 2 * n]
        return [
            self.check("rank_aiii", "the projective rank of Gr(d,n) is d+1 for n/2 <= d < n",
                       lambda: all_hold(grassmannians,
                                        lambda dn: projective_rank(HermitianSpace.grassmannian(*dn)) == dn[0] + 1)),
            self.check("rank_bdi", "pr[BDI(m)] = [m/2]",
                       lambda: all_hold(range(3, sweep_bound("bdi_max_m") + 1),
                                        lambda m: projective_rank(HermitianSpace.bdi(m)) == m // 2)),
            self.check("rank_ci", "pr[CI(n)] = n-1",
                       lambda: all_hold(range(2, sweep_bound("cd_max_n") + 1),
                                        lambda n: projective_rank(HermitianSpace.ci(n)) == n - 1)),
            self.check("rank_diii", "pr[DIII(n)] = n-1",
                       lambda: all_hold(range(3, sweep_bound("cd_max_n") + 1),
                                        lambda n: projective_rank(HermitianSpace.diii(n)) == n - 1)),
            self.check("rank_exceptional", "pr[EIII] = 5 and pr[EVII] = 6",
                       lambda: self._exceptional_ranks()),
            self.check("pair_counts", "#P(M) column: p; 2; n; [n/2]; 2; 2",
                       lambda: all_hold(iter_catalog(), self._count_holds)),
            self.check("rank_below_dimension", "projective rank never exceeds the complex dimension",
                       lambda: all_hold(iter_catalog(), lambda s: projective_rank(s) <= complex_dimension(s))),
            self.check("dimension_closed_forms", "dim_C from the marked root matches pq, m, n(n+1)/2, n(n-1)/2, 16, 27",
                       lambda: all_hold(iter_catalog(), lambda s: complex_dimension(s) == _closed_form_dimension(s))),
            self.check("min_degree_kinds", "degree 1 only for AIII, BDI, EIII, EVII; degree 2 only for CI, DIII, BDI",
                       lambda: all_hold(iter_catalog(), self._degree_kinds_hold)),
            self.check("bootstrap_identities", "pr(EIII) = pr(DIII(5)) + 1, pr(EVII) = pr(EIII) + 1 and the M+ bounds",
                       self._consistency),
        ]

    @staticmethod
    def _exceptional_ranks():
        eiii, evii = projective_rank(HermitianSpace.eiii()), projective_rank(HermitianSpace.evii())
        return eiii == 5 and evii == 6, f"EIII {eiii}, EVII {evii}"

    @staticmethod
    def _count_holds(s: HermitianSpace) -> bool:
        pairs, count = symmetric_pairs(s)
        expected = _expected_count(s)
        if s.kind in (HSSKind.EIII, HSSKind.EVII):
            # one listed pair, count column 2
            return count == expected and len(pairs) == 1
        return count == expected and len(pairs) == expected

    @staticmethod
    def _degree_kinds_hold(s: HermitianSpace) -> bool:
        degrees = min_degree(s)
        if 1 in degrees and s.kind not in (HSSKind.AIII, HSSKind.BDI, HSSKind.EIII, HSSKind.EVII):
            return False
        if 2 in degrees and s.kind not in (HSSKind.CI, HSSKind.DIII, HSSKind.BDI):
            return False
        return bool(degrees)

    @staticmethod
    def _consistency():
        report = rank_consistency_report()
        violations = report.violations
        if violations:
            return False, "; ".join(f"{c.name} ({c.detail})" for c in violations)
        return True, f"{len(report.checks)} identities"
