"""Tests for the Hermitian symmetric space catalog."""

import pytest

from catalog.hss_catalog import (
    EVII_ALTERNATE_MINUS,
    HermitianSpace,
    HSSKind,
    ambient_grassmannian,
    complex_dimension,
    iter_catalog,
    min_degree,
    projective_rank,
    rank_consistency_report,
    symmetric_pairs,
    table_count,
)
from utils.errors import CatalogConsistencyError, ParameterError


class TestHermitianSpace:
    def test_grassmannian_bijection(self):
        assert HermitianSpace.grassmannian(3, 6) == HermitianSpace.aiii(4, 3)

    def test_from_params(self):
        assert HermitianSpace.from_params("ci", [4]) == HermitianSpace.ci(4)
        assert HermitianSpace.from_params("EIII") == HermitianSpace.eiii()

    @pytest.mark.parametrize("kind,params", [
        ("AIII", (0, 3)), ("BDI", (2,)), ("CI", (1,)), ("DIII", (2,)), ("EIII", (1,)), ("CI", ()), ("FII", ()),
    ])
    def test_invalid(self, kind, params):
        with pytest.raises(ParameterError):
            HermitianSpace.from_params(kind, params)

    def test_grassmannian_range(self):
        with pytest.raises(ParameterError):
            HermitianSpace.grassmannian(4, 4)

    def test_labels(self):
        assert HermitianSpace.aiii(2, 3).label == "AIII(2,3)"
        assert HermitianSpace.evii().label == "EVII"

    def test_root_data(self):
        assert HermitianSpace.bdi(7).root_data == ("B", 4, 1)
        assert HermitianSpace.bdi(6).root_data == ("D", 4, 1)
        assert HermitianSpace.ci(3).root_data == ("C", 3, 3)


class TestProjectiveRank:
    def test_ci(self):
        assert projective_rank(HermitianSpace.ci(4)) == 3

    def test_exceptional(self):
        assert projective_rank(HermitianSpace.eiii()) == 5
        assert projective_rank(HermitianSpace.evii()) == 6

    def test_bdi(self):
        assert projective_rank(HermitianSpace.bdi(7)) == 3

    def test_gr36(self):
        assert projective_rank(HermitianSpace.grassmannian(3, 6)) == 4

    def test_aiii_sweep(self):
        for n in range(1, 15):
            for d in range(0, 8):
                if n <= 2 * d < 2 * n:
                    assert projective_rank(HermitianSpace.grassmannian(d, n)) == d + 1 <= n

    def test_classical_sweeps(self):
        for m in range(3, 13):
            assert projective_rank(HermitianSpace.bdi(m)) == m // 2
        for n in range(3, 9):
            assert projective_rank(HermitianSpace.ci(n)) == n - 1
            assert projective_rank(HermitianSpace.diii(n)) == n - 1

    def test_rank_below_dimension(self):
        for s in iter_catalog():
            assert projective_rank(s) <= complex_dimension(s), s.label


class TestComplexDimension:
    def test_exceptional(self):
        assert complex_dimension(HermitianSpace.eiii()) == 16
        assert complex_dimension(HermitianSpace.evii()) == 27

    @pytest.mark.parametrize("d,n", [(1, 3), (2, 5), (3, 6)])
    def test_grassmannian(self, d, n):
        assert complex_dimension(HermitianSpace.grassmannian(d, n)) == (d + 1) * (n - d)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_ci(self, n):
        assert complex_dimension(HermitianSpace.ci(n)) == n * (n + 1) // 2

    @pytest.mark.parametrize("n", range(3, 7))
    def test_diii(self, n):
        assert complex_dimension(HermitianSpace.diii(n)) == n * (n - 1) // 2

    @pytest.mark.parametrize("m", range(3, 9))
    def test_quadric(self, m):
        assert complex_dimension(HermitianSpace.bdi(m)) == m


class TestMinDegree:
    def test_examples(self):
        assert min_degree(HermitianSpace.diii(6)) == {2}
        assert min_degree(HermitianSpace.aiii(2, 3)) == {1}
        assert min_degree(HermitianSpace.bdi(5)) == {1, 2}

    def test_kind_implications(self):
        for s in iter_catalog():
            degrees = min_degree(s)
            if 1 in degrees:
                assert s.kind in (HSSKind.AIII, HSSKind.BDI, HSSKind.EIII, HSSKind.EVII)
            if 2 in degrees:
                assert s.kind in (HSSKind.CI, HSSKind.DIII, HSSKind.BDI)


class TestSymmetricPairs:
    def test_eiii(self):
        pairs, count = symmetric_pairs(HermitianSpace.eiii())
        assert count == 2
        assert [(p.m_plus, p.m_minus) for p in pairs] == [("DIII(5)", "S^2 x G^C(5,1)")]
        assert pairs[0].m_plus_space == HermitianSpace.diii(5)

    def test_evii(self):
        pairs, count = symmetric_pairs(HermitianSpace.evii())
        assert count == 2
        assert pairs[0].m_plus == "EIII"
        assert pairs[0].m_minus == "S^2 x G^R(10,2)"
        assert EVII_ALTERNATE_MINUS == "S^2 x G^R(12,2)"

    def test_aiii_family(self):
        pairs, count = symmetric_pairs(HermitianSpace.aiii(3, 5))
        assert count == 3
        assert [p.index for p in pairs] == [1, 2, 3]
        assert pairs[0].m_plus == "G^C(1,2) x G^C(1,4)"

    def test_projective_space_pair(self):
        pairs, _ = symmetric_pairs(HermitianSpace.aiii(1, 4))
        assert pairs[0].m_plus_space == HermitianSpace.aiii(1, 3)
        assert pairs[0].m_minus.startswith("G^C(1,1)")

    def test_ci_family(self):
        pairs, count = symmetric_pairs(HermitianSpace.ci(4))
        assert count == 4
        assert [p.index for p in pairs] == [0, 1, 2, 3]

    def test_diii_family(self):
        pairs, count = symmetric_pairs(HermitianSpace.diii(7))
        assert count == 3
        assert [p.index for p in pairs] == [2, 4, 6]

    def test_bdi_family(self):
        pairs, count = symmetric_pairs(HermitianSpace.bdi(8))
        assert count == 2 == len(pairs)

    def test_counts_over_catalog(self):
        for s in iter_catalog():
            pairs, count = symmetric_pairs(s)
            assert count == table_count(s)
            if s.kind not in (HSSKind.EIII, HSSKind.EVII):
                assert len(pairs) == count


class TestConsistency:
    def test_no_violations(self):
        report = rank_consistency_report()
        assert report.violations == []
        report.raise_for_violations()

    def test_bootstrap_identities_present(self):
        names = {c.name for c in rank_consistency_report().checks}
        assert "pr(EIII) = pr(DIII(5)) + 1" in names
        assert "pr(EVII) = pr(EIII) + 1" in names
        assert "pr(CI(4)) = pr(AIII(4,4)) - 1" in names

    def test_strict_plus_space_ranks(self):
        checks = {c.name: c.passed for c in rank_consistency_report().checks}
        assert checks["pr(DIII(5)) < pr(EIII)"]
        assert checks["pr(EIII) < pr(EVII)"]
        assert checks["pr(AIII(1,3)) < pr(AIII(1,4))"]
        # CI(n) reaches equality at k = 1
        assert checks["pr(AIII(1,3)) <= pr(CI(4))"]
        assert "pr(AIII(1,3)) < pr(CI(4))" not in checks

    def test_flags_recorded(self):
        flags = rank_consistency_report().flags
        assert len(flags) == 2
        assert any("G^R(12,2)" in f for f in flags)

    def test_raise(self):
        report = rank_consistency_report()
        report.add("forced", False)
        with pytest.raises(CatalogConsistencyError):
            report.raise_for_violations()

    def test_ambient(self):
        assert ambient_grassmannian(HermitianSpace.diii(5)) == HermitianSpace.aiii(5, 5)
        with pytest.raises(ParameterError):
            ambient_grassmannian(HermitianSpace.eiii())
