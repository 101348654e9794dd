"""Weyl dimension formula and bounded enumeration of irreducible representations."""

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, Iterator, List, Sequence, Set, Tuple

from algebra.root_system import RootSystem, RootSystemFactory, coroot_pairing
from utils.errors import InternalConsistencyError, ParameterError, UnsupportedOperationError
from utils.logging import get_logger

logger = get_logger("rep_theory")


@dataclass(frozen=True)
class DominantWeight:
    """lambda = m_1 lambda_1 + ... + m_l lambda_l."""

    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if any((not isinstance(m, int)) or m < 0 for m in self.coeffs):
            raise ParameterError(f"dominant weight needs nonnegative integers, got {self.coeffs}")

    @classmethod
    def fundamental(cls, rank: int, index: int) -> "DominantWeight":
        """lambda_index (1-based) for a rank-`rank` system."""
        if not 1 <= index <= rank:
            raise ParameterError(f"fundamental weight index {index} outside 1..{rank}")
        return cls(tuple(1 if i == index - 1 else 0 for i in range(rank)))

    @classmethod
    def zero(cls, rank: int) -> "DominantWeight":
        return cls((0,) * rank)

    @property
    def is_trivial(self) -> bool:
        return not any(self.coeffs)

    def raised(self, index: int) -> "DominantWeight":
        """Copy with m_index (0-based) increased by one."""
        coeffs = list(self.coeffs)
        coeffs[index] += 1
        return DominantWeight(tuple(coeffs))


@dataclass(frozen=True)
class IrrepRecord:
    weight: DominantWeight
    dimension: int


@dataclass
class Prop31Result:
    """Outcome of the trivial-summand computation for a d-dimensional SL(l+1)-module."""

    rank: int
    dimension: int
    trivial_summand: int
    bound: int
    gates: List[str] = field(default_factory=list)
    blocks: List[int] = field(default_factory=list)


def _as_weight(weight) -> DominantWeight:
    if isinstance(weight, DominantWeight):
        return weight
    return DominantWeight(tuple(int(m) for m in weight))


def weyl_dimension(rs: RootSystem, weight) -> int:
    """
    Dimension of the irreducible module with highest weight lambda.

    deg lambda = prod <lambda + delta, alpha^vee> / prod <delta, alpha^vee>
    over the positive roots, evaluated as one exact rational.

    Args:
        rs: Root system
        weight: DominantWeight (or coefficient sequence) of length rank

    Returns:
        The dimension as an integer

    Raises:
        ParameterError: If the weight length does not match the rank
        InternalConsistencyError: If the quotient is not an integer
    """
    weight = _as_weight(weight)
    if len(weight.coeffs) != rs.rank:
        raise ParameterError(f"weight {weight.coeffs} has length {len(weight.coeffs)}, rank is {rs.rank}")
    quotient = Fraction(1)
    for root in rs.positive_roots:
        quotient *= Fraction(
            coroot_pairing(rs, weight.coeffs, root),
            coroot_pairing(rs, (0,) * rs.rank, root),
        )
    if quotient.denominator != 1:
        raise InternalConsistencyError(f"Weyl quotient {quotient} for {rs.label} {weight.coeffs} is not integral")
    return int(quotient)


def tableau_dimension_oracle(rank: int, weight, type_label: str = "A") -> int:
    """
    Count semistandard tableaux with entries in 1..l+1 via the hook-content formula.

    The Young diagram has row lengths mu_j = m_j + ... + m_l (j = 1..l), so
    lambda_i corresponds to a single column of height i.

    Raises:
        UnsupportedOperationError: For types other than A
    """
    if type_label != "A":
        raise UnsupportedOperationError(f"tableau oracle is defined for type A only, got {type_label}")
    weight = _as_weight(weight)
    if len(weight.coeffs) != rank:
        raise ParameterError(f"weight {weight.coeffs} has length {len(weight.coeffs)}, rank is {rank}")
    n = rank + 1
    rows = [sum(weight.coeffs[j:]) for j in range(rank)]
    rows = [r for r in rows if r > 0]
    columns = [sum(1 for r in rows if r > c) for c in range(rows[0])] if rows else []
    numerator = 1
    denominator = 1
    for i, length in enumerate(rows):
        for j in range(length):
            numerator *= n + j - i
            denominator *= (length - j - 1) + (columns[j] - i - 1) + 1
    if numerator % denominator:
        raise InternalConsistencyError(f"hook-content quotient {numerator}/{denominator} is not integral")
    return numerator // denominator


def enumerate_irreps_below(rs: RootSystem, bound: int) -> List[IrrepRecord]:
    """
    All irreducible modules of dimension at most `bound`, trivial one included.

    Breadth-first search from lambda = 0 raising one coefficient at a time.
    Raising any m_i strictly increases the dimension, so a weight above the
    bound has no descendant below it and the search can stop there.

    Returns:
        Records sorted by (dimension, coefficients)
    """
    if bound < 1:
        return []
    start = DominantWeight.zero(rs.rank)
    seen: Set[DominantWeight] = {start}
    queue = deque([start])
    records: List[IrrepRecord] = []
    while queue:
        weight = queue.popleft()
        dimension = weyl_dimension(rs, weight)
        if dimension > bound:
            continue
        records.append(IrrepRecord(weight=weight, dimension=dimension))
        for index in range(rs.rank):
            nxt = weight.raised(index)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    records.sort(key=lambda rec: (rec.dimension, rec.weight.coeffs))
    logger.debug("%s: %d irreps of dimension <= %d (%d weights visited)", rs.label, len(records), bound, len(seen))
    return records


def frontier_weights(rs: RootSystem, records: Sequence[IrrepRecord]) -> List[DominantWeight]:
    """Weights one step above the enumerated set that are not in it."""
    inside = {rec.weight for rec in records}
    frontier: Set[DominantWeight] = set()
    for weight in inside:
        for index in range(rs.rank):
            nxt = weight.raised(index)
            if nxt not in inside:
                frontier.add(nxt)
    if not inside:
        frontier.add(DominantWeight.zero(rs.rank))
    return sorted(frontier, key=lambda w: w.coeffs)


def prop31_gates(rank: int, d: int) -> List[str]:
    """Names of the hypothesis ranges admitting (l, d)."""
    gates = []
    if rank >= 4 and rank + 1 < d < 2 * rank:
        gates.append("l>=4, l+1<d<2l")
    if rank >= 5 and rank + 1 < d < 2 * (rank + 1):
        gates.append("l>=5, l+1<d<2(l+1)")
    return gates


def prop31_trivial_summand(rank: int, d: int) -> Prop31Result:
    """
    Smallest trivial summand a d-dimensional SL(l+1)-module can have.

    A module is a multiset of irreducible dimensions summing to d; the trivial
    part is whatever the nontrivial blocks leave over.

    Raises:
        ParameterError: If (l, d) is outside both hypothesis ranges
        InternalConsistencyError: If the result violates r >= d - l - 1
    """
    gates = prop31_gates(rank, d)
    if not gates:
        raise ParameterError(f"(l, d) = ({rank}, {d}) is outside the hypotheses l+1 < d < 2l or l >= 5, l+1 < d < 2(l+1)")
    rs = RootSystemFactory.get("A", rank)
    blocks = sorted({rec.dimension for rec in enumerate_irreps_below(rs, d) if not rec.weight.is_trivial})
    # unbounded knapsack: largest total <= d reachable with nontrivial blocks
    reachable = [False] * (d + 1)
    reachable[0] = True
    for total in range(1, d + 1):
        reachable[total] = any(b <= total and reachable[total - b] for b in blocks)
    best = max(total for total in range(d + 1) if reachable[total])
    trivial = d - best
    bound = d - rank - 1
    if trivial < bound:
        raise InternalConsistencyError(f"l={rank}, d={d}: trivial summand {trivial} below {bound}")
    return Prop31Result(rank=rank, dimension=d, trivial_summand=trivial, bound=bound, gates=gates, blocks=blocks)


def prop31_admissible(max_rank: int) -> List[Tuple[int, int]]:
    """Every (l, d) with l <= max_rank admitted by at least one hypothesis range."""
    return [
        (rank, d)
        for rank in range(4, max_rank + 1)
        for d in range(rank + 2, 2 * (rank + 1))
        if prop31_gates(rank, d)
    ]


def symmetric_power_dimension(rank: int, m: int) -> int:
    """dim Sym^m of the standard SL(l+1)-module, binomial(l+m, m)."""
    return comb(rank + m, m)


def fundamental_dimensions(rs: RootSystem) -> Dict[int, int]:
    """deg lambda_i for every i."""
    return {i: weyl_dimension(rs, DominantWeight.fundamental(rs.rank, i)) for i in range(1, rs.rank + 1)}


def iter_weights(rank: int, max_sum: int) -> Iterator[DominantWeight]:
    """Every dominant weight with m_1 + ... + m_l <= max_sum, zero first."""
    for total in range(max_sum + 1):
        for cuts in combinations_with_replacement(range(rank), total):
            coeffs = [0] * rank
            for i in cuts:
                coeffs[i] += 1
            yield DominantWeight(tuple(coeffs))
