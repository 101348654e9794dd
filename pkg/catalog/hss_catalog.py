"""Catalog of the compact irreducible Hermitian symmetric spaces.

Each space is a G/P with a marked simple root:

    AIII(p, q)  complex p-planes in C^{p+q}   (A_{p+q-1}, alpha_p)
    BDI(m)      the quadric Q_m                (B_l, alpha_1) for m = 2l - 1, (D_l, alpha_1) for m = 2l - 2
    CI(n)       Lagrangian n-planes in C^{2n}  (C_n, alpha_n)
    DIII(n)     isotropic n-planes for S_n     (D_n, alpha_n)
    EIII        E6 / Spin(10) U(1)             (E6, alpha_1)
    EVII        E7 / E6 U(1)                   (E7, alpha_7)

The Grassmannian Gr(d, n) of projective d-planes in P^n is AIII(d+1, n-d).
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from algebra.root_system import RootSystemFactory, parabolic_split
from config.settings import sweep_bound
from utils.errors import CatalogConsistencyError, ParameterError
from utils.logging import get_logger

logger = get_logger("hss_catalog")


class HSSKind(str, Enum):
    AIII = "AIII"
    BDI = "BDI"
    CI = "CI"
    DIII = "DIII"
    EIII = "EIII"
    EVII = "EVII"


_PARAM_COUNT = {
    HSSKind.AIII: 2,
    HSSKind.BDI: 1,
    HSSKind.CI: 1,
    HSSKind.DIII: 1,
    HSSKind.EIII: 0,
    HSSKind.EVII: 0,
}


@dataclass(frozen=True)
class HermitianSpace:
    """Tagged descriptor of one irreducible compact Hermitian symmetric space."""

    kind: HSSKind
    params: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "kind", HSSKind(self.kind))
        expected = _PARAM_COUNT[self.kind]
        if len(self.params) != expected:
            raise ParameterError(f"{self.kind.value} takes {expected} parameters, got {len(self.params)}")
        if any(not isinstance(x, int) for x in self.params):
            raise ParameterError(f"parameters must be integers, got {self.params}")
        if self.kind == HSSKind.AIII and min(self.params) < 1:
            raise ParameterError(f"AIII(p, q) needs p, q >= 1, got {self.params}")
        if self.kind == HSSKind.BDI and self.params[0] < 3:
            raise ParameterError(f"BDI(m) needs m >= 3, got {self.params[0]}")
        if self.kind == HSSKind.CI and self.params[0] < 2:
            raise ParameterError(f"CI(n) needs n >= 2, got {self.params[0]}")
        if self.kind == HSSKind.DIII and self.params[0] < 3:
            raise ParameterError(f"DIII(n) needs n >= 3, got {self.params[0]}")

    @classmethod
    def aiii(cls, p: int, q: int) -> "HermitianSpace":
        return cls(HSSKind.AIII, (p, q))

    @classmethod
    def grassmannian(cls, d: int, n: int) -> "HermitianSpace":
        """Gr(d, n): projective d-planes in P^n, i.e. AIII(d+1, n-d)."""
        if not 0 <= d < n:
            raise ParameterError(f"Gr(d, n) needs 0 <= d < n, got d={d}, n={n}")
        return cls.aiii(d + 1, n - d)

    @classmethod
    def bdi(cls, m: int) -> "HermitianSpace":
        return cls(HSSKind.BDI, (m,))

    @classmethod
    def ci(cls, n: int) -> "HermitianSpace":
        return cls(HSSKind.CI, (n,))

    @classmethod
    def diii(cls, n: int) -> "HermitianSpace":
        return cls(HSSKind.DIII, (n,))

    @classmethod
    def eiii(cls) -> "HermitianSpace":
        return cls(HSSKind.EIII)

    @classmethod
    def evii(cls) -> "HermitianSpace":
        return cls(HSSKind.EVII)

    @classmethod
    def from_params(cls, kind: str, params: Sequence[int] = ()) -> "HermitianSpace":
        """Build from a kind name and a parameter list, as given on the command line."""
        try:
            hss_kind = HSSKind(kind.upper())
        except ValueError as e:
            raise ParameterError(f"unknown kind {kind!r}; choose from {', '.join(k.value for k in HSSKind)}") from e
        return cls(hss_kind, tuple(int(x) for x in params))

    @property
    def label(self) -> str:
        if not self.params:
            return self.kind.value
        return f"{self.kind.value}({','.join(str(x) for x in self.params)})"

    @property
    def root_data(self) -> Tuple[str, int, int]:
        """(type_label, rank, marked simple root)."""
        if self.kind == HSSKind.AIII:
            p, q = self.params
            return ("A", p + q - 1, p)
        if self.kind == HSSKind.BDI:
            m = self.params[0]
            if m % 2:
                return ("B", (m + 1) // 2, 1)
            return ("D", (m + 2) // 2, 1)
        if self.kind == HSSKind.CI:
            n = self.params[0]
            return ("C", n, n)
        if self.kind == HSSKind.DIII:
            n = self.params[0]
            return ("D", n, n)
        if self.kind == HSSKind.EIII:
            return ("E6", 6, 1)
        return ("E7", 7, 7)


@dataclass(frozen=True)
class SymmetricPair:
    """One (M+, M-) row entry; product spaces are opaque labels."""

    m_plus: str
    m_minus: str
    constraint: str
    index: Optional[int] = None
    m_plus_space: Optional[HermitianSpace] = None


def projective_rank(s: HermitianSpace) -> int:
    """
    Largest P^k embedded totally geodesically as a complex submanifold.

    AIII(p, q) -> max(p, q), which is d+1 for Gr(d, n) with n/2 <= d < n.
    """
    if s.kind == HSSKind.AIII:
        return max(s.params)
    if s.kind == HSSKind.BDI:
        return s.params[0] // 2
    if s.kind in (HSSKind.CI, HSSKind.DIII):
        return s.params[0] - 1
    if s.kind == HSSKind.EIII:
        return 5
    return 6


def complex_dimension(s: HermitianSpace) -> int:
    """|Phi(n+)| for the marked root of the space."""
    type_label, rank, marked = s.root_data
    return parabolic_split(RootSystemFactory.get(type_label, rank), marked).complex_dimension


def min_degree(s: HermitianSpace) -> FrozenSet[int]:
    """Minimal degree of a totally geodesic P^{pr} in the Pluecker embedding; BDI allows both."""
    if s.kind in (HSSKind.CI, HSSKind.DIII):
        return frozenset({2})
    if s.kind == HSSKind.BDI:
        return frozenset({1, 2})
    return frozenset({1})


def _aiii_plus_space(h: int, p: int, q: int) -> Optional[HermitianSpace]:
    # G^C(h, p-h) x G^C(h, q-h) is a single Grassmannian when one factor is a point
    if h == p and q > p:
        return HermitianSpace.aiii(p, q - p)
    return None


def symmetric_pairs(s: HermitianSpace) -> Tuple[List[SymmetricPair], int]:
    """
    The (M+, M-) family of the space and its count #P(M).

    Returns:
        (pairs, count); count equals len(pairs)
    """
    pairs: List[SymmetricPair] = []
    if s.kind == HSSKind.AIII:
        p, q = sorted(s.params)
        for h in range(1, p + 1):
            pairs.append(SymmetricPair(
                m_plus=f"G^C({h},{p - h}) x G^C({h},{q - h})",
                m_minus=f"G^C({h},{h}) x G^C({p - h},{q - h})",
                constraint="0 < h <= p <= q",
                index=h,
                m_plus_space=_aiii_plus_space(h, p, q),
            ))
    elif s.kind == HSSKind.BDI:
        m = s.params[0]
        for h in range(1, 3):
            pairs.append(SymmetricPair(
                m_plus=f"G^R({h},{2 - h}) x G^R({h},{m - h})",
                m_minus=f"G^R({h},{h}) x G^R({2 - h},{m - h})",
                constraint="0 < h <= p = 2 <= q = m",
                index=h,
            ))
    elif s.kind == HSSKind.CI:
        n = s.params[0]
        for k in range(0, n):
            pairs.append(SymmetricPair(
                m_plus=f"G^C({k},{n - k})",
                m_minus=f"CI({k}) x CI({n - k})",
                constraint="0 <= k <= n-1",
                index=k,
                m_plus_space=HermitianSpace.aiii(k, n - k) if k >= 1 else None,
            ))
    elif s.kind == HSSKind.DIII:
        n = s.params[0]
        for k in range(2, n + 1, 2):
            pairs.append(SymmetricPair(
                m_plus=f"G^C({k},{n - k})",
                m_minus=f"DIII({k}) x DIII({n - k})",
                constraint="0 < k <= n, k even",
                index=k,
                m_plus_space=HermitianSpace.aiii(k, n - k) if k < n else None,
            ))
    elif s.kind == HSSKind.EIII:
        pairs.append(SymmetricPair(
            m_plus="DIII(5)", m_minus="S^2 x G^C(5,1)", constraint="", m_plus_space=HermitianSpace.diii(5),
        ))
    else:
        pairs.append(SymmetricPair(
            m_plus="EIII", m_minus="S^2 x G^R(10,2)", constraint="", m_plus_space=HermitianSpace.eiii(),
        ))
    return pairs, table_count(s)


def table_count(s: HermitianSpace) -> int:
    """The #P(M) column: min(p, q); 2; n; floor(n/2); 2; 2."""
    if s.kind == HSSKind.AIII:
        return min(s.params)
    if s.kind == HSSKind.CI:
        return s.params[0]
    if s.kind == HSSKind.DIII:
        return s.params[0] // 2
    return 2


# Second label the EVII minus-space carries in the degree discussion
EVII_ALTERNATE_MINUS = "S^2 x G^R(12,2)"


def ambient_grassmannian(s: HermitianSpace) -> HermitianSpace:
    """CI(n) and DIII(n) sit inside G(n, 2n) = AIII(n, n)."""
    if s.kind not in (HSSKind.CI, HSSKind.DIII):
        raise ParameterError(f"{s.label} has no isotropic-Grassmannian ambient")
    n = s.params[0]
    return HermitianSpace.aiii(n, n)


def iter_catalog() -> Iterator[HermitianSpace]:
    """Every descriptor of the sweep ranges, in a fixed order."""
    max_pq = sweep_bound("catalog_max_pq")
    for p in range(1, max_pq + 1):
        for q in range(p, max_pq + 1):
            yield HermitianSpace.aiii(p, q)
    for m in range(3, sweep_bound("bdi_max_m") + 1):
        yield HermitianSpace.bdi(m)
    for n in range(2, sweep_bound("cd_max_n") + 1):
        yield HermitianSpace.ci(n)
    for n in range(3, sweep_bound("cd_max_n") + 1):
        yield HermitianSpace.diii(n)
    yield HermitianSpace.eiii()
    yield HermitianSpace.evii()


@dataclass
class ConsistencyCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ConsistencyReport:
    """Bootstrap identities between projective ranks, plus recorded reading flags."""

    checks: List[ConsistencyCheck] = field(default_factory=list)
    flags: List[str] = field(default_factory=list)

    @property
    def violations(self) -> List[ConsistencyCheck]:
        return [c for c in self.checks if not c.passed]

    def raise_for_violations(self):
        if self.violations:
            names = ", ".join(c.name for c in self.violations)
            raise CatalogConsistencyError(f"catalog identities failed: {names}")

    def add(self, name: str, passed: bool, detail: str = ""):
        self.checks.append(ConsistencyCheck(name=name, passed=bool(passed), detail=detail))


# M+ is a single space of strictly smaller projective rank; CI and DIII reach equality at the ends of their families
_STRICT_PLUS_KINDS = (HSSKind.AIII, HSSKind.EIII, HSSKind.EVII)


def rank_consistency_report() -> ConsistencyReport:
    """Check the projective-rank identities the catalog must satisfy."""
    report = ConsistencyReport()
    eiii, evii, diii5 = HermitianSpace.eiii(), HermitianSpace.evii(), HermitianSpace.diii(5)
    report.add(
        "pr(EIII) = pr(DIII(5)) + 1",
        projective_rank(eiii) == projective_rank(diii5) + 1,
        f"{projective_rank(eiii)} vs {projective_rank(diii5)} + 1",
    )
    report.add(
        "pr(EVII) = pr(EIII) + 1",
        projective_rank(evii) == projective_rank(eiii) + 1,
        f"{projective_rank(evii)} vs {projective_rank(eiii)} + 1",
    )
    for n in range(2, sweep_bound("cd_max_n") + 1):
        spaces = [HermitianSpace.ci(n)] + ([HermitianSpace.diii(n)] if n >= 3 else [])
        for s in spaces:
            ambient = ambient_grassmannian(s)
            report.add(
                f"pr({s.label}) = pr({ambient.label}) - 1",
                projective_rank(s) == projective_rank(ambient) - 1,
                f"{projective_rank(s)} vs {projective_rank(ambient)} - 1",
            )
    for s in iter_catalog():
        pairs, _ = symmetric_pairs(s)
        for pair in pairs:
            if pair.m_plus_space is None:
                continue
            plus, rank_plus, rank_s = pair.m_plus_space, projective_rank(pair.m_plus_space), projective_rank(s)
            if s.kind in _STRICT_PLUS_KINDS:
                report.add(f"pr({plus.label}) < pr({s.label})", rank_plus < rank_s, f"M+ = {pair.m_plus}")
            else:
                report.add(f"pr({plus.label}) <= pr({s.label})", rank_plus <= rank_s, f"M+ = {pair.m_plus}")
    for n in range(2, sweep_bound("aiii_max_n") + 1):
        pairs, _ = symmetric_pairs(HermitianSpace.aiii(1, n))
        first = pairs[0]
        report.add(
            f"P^{n} pair = (P^{n - 1}, S^2)",
            first.m_plus_space == HermitianSpace.aiii(1, n - 1) and first.m_minus.startswith("G^C(1,1)"),
            f"({first.m_plus}, {first.m_minus})",
        )
    report.flags.append(
        "projective rank of AIII follows pr(Gr(d, n)) = d + 1; the statement pr[AIII(n, d)] = d needs an index shift"
    )
    report.flags.append(f"EVII minus-space: table lists S^2 x G^R(10,2), degree discussion writes {EVII_ALTERNATE_MINUS}")
    logger.info("rank consistency: %d checks, %d violations", len(report.checks), len(report.violations))
    return report
