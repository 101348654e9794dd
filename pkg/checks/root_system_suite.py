"""Verification suite for root systems and parabolic splits."""

from itertools import combinations
from typing import List

from algebra.root_system import (
    RootSystemFactory,
    cartan_involution_stable,
    classical_positive_root_count,
    classify_cartan,
    coroot_pairing,
    delete_vertices,
    hermitian_marked_roots,
    induced_cartan,
    is_reflection_closed,
    parabolic_split,
    positive_roots_from_cartan,
)
from checks.base_suite import BaseSuite, Check, all_hold
from config.settings import sweep_bound


def _families(max_rank: int):
    for type_label, low in (("A", 1), ("B", 2), ("C", 2), ("D", 3)):
        for rank in range(low, max_rank + 1):
            yield type_label, rank
    yield "E6", 6
    yield "E7", 7


def _subdiagram_count(rs, removed) -> bool:
    kept = [i for i in range(1, rs.rank + 1) if i not in removed]
    components = delete_vertices(rs, removed)
    expected = sum(classical_positive_root_count(t, r) for t, r in components)
    closure = len(positive_roots_from_cartan(induced_cartan(rs, kept))) if kept else 0
    return expected == closure


class RootSystemSuite(BaseSuite):
    """Positive-root counts, parabolic dimensions and Dynkin subdiagrams."""

    def __init__(self):
        super().__init__("root_system")

    def get_checks(self) -> List[Check]:
        max_rank = sweep_bound("parabolic_a_rank")
        return [
            self.check("positive_counts", "|Phi+| matches the classical count for every type",
                       lambda: all_hold(_families(max_rank), self._count_holds)),
            self.check("reflection_closed", "positive roots are closed under simple reflections",
                       lambda: all_hold(_families(max_rank),
                                        lambda tr: is_reflection_closed(RootSystemFactory.get(*tr)))),
            self.check("parabolic_partition", "Phi_1 and Phi(n+) partition Phi+ for every marked root",
                       lambda: all_hold(self._marked(max_rank), self._partition_holds)),
            self.check("parabolic_a_type", "|Phi(n+)| = r(l+1-r) for (A_l, alpha_r)",
                       lambda: all_hold(
                           [(l, r) for l in range(1, max_rank + 1) for r in range(1, l + 1)],
                           lambda lr: parabolic_split(RootSystemFactory.get("A", lr[0]), lr[1]).complex_dimension
                           == lr[1] * (lr[0] + 1 - lr[1]))),
            self.check("parabolic_hermitian", "complex dimensions of all Hermitian markings match closed forms",
                       lambda: all_hold(
                           hermitian_marked_roots(max_rank),
                           lambda e: parabolic_split(RootSystemFactory.get(e[1], e[2]), e[3]).complex_dimension
                           == e[4])),
            self.check("parabolic_e6", "dim (E6, alpha_1) = 16",
                       lambda: self._dimension("E6", 6, 1, 16)),
            self.check("parabolic_e7", "dim (E7, alpha_7) = 27",
                       lambda: self._dimension("E7", 7, 7, 27)),
            self.check("delta_pairing", "<delta, alpha^vee> is 1 on simple roots and the height when simply laced",
                       lambda: all_hold(_families(max_rank), self._delta_holds)),
            self.check("a_type_pairing", "<lambda + delta, alpha^vee> = m_i + ... + m_{i+r-1} + r in type A",
                       lambda: all_hold(range(1, 6), self._a_pairing_holds)),
            self.check("e6_minus_alpha2", "deleting alpha_2 from E6 leaves A5",
                       lambda: self._deletion("E6", 6, {2}, [("A", 5)])),
            self.check("e7_minus_alpha2", "deleting alpha_2 from E7 leaves A6",
                       lambda: self._deletion("E7", 7, {2}, [("A", 6)])),
            self.check("subdiagrams_exhaustive", "every E6/E7 subdiagram classification matches its root count",
                       self._subdiagrams),
            self.check("eiii_involution", "the EIII diagram involution preserves the A5 subdiagram",
                       lambda: (cartan_involution_stable(), "(1,6)(3,5)")),
        ]

    @staticmethod
    def _count_holds(type_rank) -> bool:
        rs = RootSystemFactory.get(*type_rank)
        simple = {rs.simple_root(i).coeffs for i in range(1, rs.rank + 1)}
        members = {root.coeffs for root in rs.positive_roots}
        return (
            len(rs.positive_roots) == classical_positive_root_count(*type_rank)
            and simple <= members
            and all(min(c) >= 0 and max(c) > 0 for c in members)
        )

    @staticmethod
    def _marked(max_rank: int):
        for type_label, rank in _families(max_rank):
            for r in range(1, rank + 1):
                yield type_label, rank, r

    @staticmethod
    def _partition_holds(case) -> bool:
        type_label, rank, r = case
        rs = RootSystemFactory.get(type_label, rank)
        split = parabolic_split(rs, r)
        both = set(split.phi_1) | set(split.phi_n_plus)
        return not set(split.phi_1) & set(split.phi_n_plus) and both == set(rs.positive_roots)

    @staticmethod
    def _dimension(type_label, rank, marked, expected):
        value = parabolic_split(RootSystemFactory.get(type_label, rank), marked).complex_dimension
        return value == expected, f"{value}"

    @staticmethod
    def _delta_holds(type_rank) -> bool:
        rs = RootSystemFactory.get(*type_rank)
        zero = (0,) * rs.rank
        if any(coroot_pairing(rs, zero, rs.simple_root(i)) != 1 for i in range(1, rs.rank + 1)):
            return False
        if type_rank[0] in ("B", "C"):
            return True
        return all(coroot_pairing(rs, zero, root) == root.height for root in rs.positive_roots)

    @staticmethod
    def _a_pairing_holds(rank: int) -> bool:
        rs = RootSystemFactory.get("A", rank)
        weights = [tuple((i + 2 * j) % 3 for j in range(rank)) for i in range(3)]
        for weight in weights:
            for root in rs.positive_roots:
                support = [i for i, c in enumerate(root.coeffs) if c]
                expected = sum(weight[i] for i in support) + len(support)
                if coroot_pairing(rs, weight, root) != expected:
                    return False
        return True

    @staticmethod
    def _deletion(type_label, rank, removed, expected):
        components = delete_vertices(RootSystemFactory.get(type_label, rank), removed)
        return components == expected, f"{components}"

    @staticmethod
    def _subdiagrams():
        total = 0
        for type_label, rank in (("E6", 6), ("E7", 7)):
            rs = RootSystemFactory.get(type_label, rank)
            for size in range(rank + 1):
                for removed in combinations(range(1, rank + 1), size):
                    if not _subdiagram_count(rs, set(removed)):
                        return False, f"{type_label} minus {removed}"
                    total += 1
        # whole-diagram classification sanity
        full = classify_cartan(RootSystemFactory.get("E7", 7).cartan_matrix)
        return full == ("E7", 7), f"{total} subsets"
