"""Root systems of types A, B, C, D, E6, E7 with parabolic and Dynkin-subdiagram data.

Roots are integer coefficient vectors over the simple roots. The Cartan
matrix convention used throughout is

    C[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)

so that the pairing of beta = sum b_i alpha_i with alpha_j^vee is
sum_i b_i C[i][j]. For B_l the short simple root is alpha_l, for C_l the
long one is alpha_l.

E6 and E7 use the Bourbaki numbering: the chain alpha_1 - alpha_3 - alpha_4 -
alpha_5 - alpha_6 (- alpha_7) with alpha_2 attached to alpha_4. This is the
labelling of the diagrams used for the EIII and EVII arguments, where alpha_2
is the branch neighbour whose removal leaves A_5 (resp. A_6).

F4, G2 and E8 are not supported: none of them has a Hermitian symmetric
quotient.
"""

import threading
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from config.settings import ROOT_SYSTEM_CONFIGS
from utils.errors import ParameterError, InternalConsistencyError
from utils.logging import get_logger

logger = get_logger("root_system")

CartanMatrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class Root:
    """A root as coefficients n_i(alpha) over the simple roots."""

    coeffs: Tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def is_simple(self) -> bool:
        return self.height == 1 and all(c >= 0 for c in self.coeffs)

    def coefficient(self, index: int) -> int:
        """n_index(alpha) with a 1-based simple root index."""
        return self.coeffs[index - 1]


@dataclass(frozen=True)
class RootSystem:
    """Simple-root basis, Cartan matrix and positive roots of one type."""

    type_label: str
    rank: int
    cartan_matrix: CartanMatrix
    positive_roots: Tuple[Root, ...]

    def simple_root(self, index: int) -> Root:
        """The simple root alpha_index (1-based)."""
        if not 1 <= index <= self.rank:
            raise ParameterError(f"simple root index {index} outside 1..{self.rank}")
        return Root(tuple(1 if i == index - 1 else 0 for i in range(self.rank)))

    @property
    def label(self) -> str:
        if self.type_label in ("E6", "E7"):
            return self.type_label
        return f"{self.type_label}{self.rank}"

    def to_dict(self) -> Dict[str, object]:
        """JSON shape: type, rank, cartan matrix, roots as integer arrays."""
        return {
            "type": self.type_label,
            "rank": self.rank,
            "cartan_matrix": [list(row) for row in self.cartan_matrix],
            "positive_roots": [list(root.coeffs) for root in self.positive_roots],
        }


@dataclass(frozen=True)
class ParabolicSplit:
    """Phi_1 (positives with n_r = 0) and Phi(n+) (n_r > 0) for a marked root r."""

    root_system: RootSystem
    marked_root: int
    phi_1: Tuple[Root, ...]
    phi_n_plus: Tuple[Root, ...]

    @property
    def complex_dimension(self) -> int:
        """Complex dimension of the C-space (type, alpha_r)."""
        return len(self.phi_n_plus)

    def to_dict(self) -> Dict[str, object]:
        return {
            "type": self.root_system.type_label,
            "rank": self.root_system.rank,
            "marked_root": self.marked_root,
            "phi_1": [list(root.coeffs) for root in self.phi_1],
            "phi_n_plus": [list(root.coeffs) for root in self.phi_n_plus],
            "complex_dimension": self.complex_dimension,
        }


def _edges_for(type_label: str, rank: int) -> List[Tuple[int, int]]:
    """0-based Dynkin edges (multiplicity handled separately)."""
    if type_label in ("A", "B", "C"):
        return [(i, i + 1) for i in range(rank - 1)]
    if type_label == "D":
        chain = [(i, i + 1) for i in range(rank - 2)]
        return chain + [(rank - 3, rank - 1)]
    if type_label in ("E6", "E7"):
        # Bourbaki: 1-3, 3-4, 4-5, 5-6, (6-7), 2-4
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        if type_label == "E7":
            edges.append((5, 6))
        return edges
    raise ParameterError(f"unsupported root system type: {type_label}")


def cartan_matrix(type_label: str, rank: int) -> CartanMatrix:
    """
    Build the Cartan matrix C[i][j] = <alpha_i, alpha_j^vee>.

    Args:
        type_label: One of A, B, C, D, E6, E7
        rank: Rank of the system

    Returns:
        Cartan matrix as a tuple of integer rows
    """
    _validate_type_rank(type_label, rank)
    matrix = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in _edges_for(type_label, rank):
        matrix[i][j] = -1
        matrix[j][i] = -1
    if type_label == "B":
        # alpha_l short: <alpha_{l-1}, alpha_l^vee> = -2
        matrix[rank - 2][rank - 1] = -2
    elif type_label == "C":
        # alpha_l long: <alpha_l, alpha_{l-1}^vee> = -2
        matrix[rank - 1][rank - 2] = -2
    return tuple(tuple(row) for row in matrix)


def _validate_type_rank(type_label: str, rank: int) -> None:
    config = ROOT_SYSTEM_CONFIGS.get(type_label)
    if config is None:
        raise ParameterError(
            f"unsupported root system type {type_label!r}; F4, G2 and E8 have no Hermitian symmetric quotient"
        )
    if not isinstance(rank, int) or rank < config["min_rank"]:
        raise ParameterError(f"type {type_label} needs rank >= {config['min_rank']}, got {rank}")
    if config["max_rank"] is not None and rank > config["max_rank"]:
        raise ParameterError(f"type {type_label} has rank {config['max_rank']}, got {rank}")


def pairing(cartan: CartanMatrix, coeffs: Sequence[int], index: int) -> int:
    """<beta, alpha_index^vee> for beta given by simple-root coefficients (0-based index)."""
    return sum(b * cartan[i][index] for i, b in enumerate(coeffs))


def reflect(cartan: CartanMatrix, coeffs: Sequence[int], index: int) -> Tuple[int, ...]:
    """Simple reflection s_index(beta) = beta - <beta, alpha_index^vee> alpha_index."""
    shift = pairing(cartan, coeffs, index)
    result = list(coeffs)
    result[index] -= shift
    return tuple(result)


def positive_roots_from_cartan(cartan: CartanMatrix) -> Tuple[Root, ...]:
    """
    Breadth-first reflection closure of the simple roots inside Phi+.

    Every positive root is reachable from a simple root through simple
    reflections that stay positive, so the closure is all of Phi+.
    """
    rank = len(cartan)
    simple = [tuple(1 if i == j else 0 for i in range(rank)) for j in range(rank)]
    seen = set(simple)
    order: List[Tuple[int, ...]] = list(simple)
    queue = deque(simple)
    while queue:
        current = queue.popleft()
        for index in range(rank):
            image = reflect(cartan, current, index)
            if all(c >= 0 for c in image) and any(image) and image not in seen:
                seen.add(image)
                order.append(image)
                queue.append(image)
    order.sort(key=lambda c: (sum(c), tuple(-x for x in c)))
    return tuple(Root(c) for c in order)


def build_root_system(type_label: str, rank: int) -> RootSystem:
    """
    Construct the root system of the given type and rank.

    Args:
        type_label: One of A, B, C, D, E6, E7
        rank: l >= 1 for A, >= 2 for B/C, >= 3 for D, 6 for E6, 7 for E7

    Returns:
        RootSystem with positive roots sorted by height

    Raises:
        ParameterError: If the (type, rank) combination is unsupported
    """
    cartan = cartan_matrix(type_label, rank)
    roots = positive_roots_from_cartan(cartan)
    expected = classical_positive_root_count(type_label, rank)
    if len(roots) != expected:
        raise InternalConsistencyError(
            f"{type_label}{rank}: closure produced {len(roots)} positive roots, expected {expected}"
        )
    logger.debug("built %s%s with %d positive roots", type_label, rank, len(roots))
    return RootSystem(type_label=type_label, rank=rank, cartan_matrix=cartan, positive_roots=roots)


def classical_positive_root_count(type_label: str, rank: int) -> int:
    """Closed-form |Phi+| for each type."""
    if type_label == "A":
        return rank * (rank + 1) // 2
    if type_label in ("B", "C"):
        return rank * rank
    if type_label == "D":
        return rank * (rank - 1)
    if type_label == "E6":
        return 36
    if type_label == "E7":
        return 63
    raise ParameterError(f"unsupported root system type: {type_label}")


def is_reflection_closed(rs: RootSystem) -> bool:
    """Re-running the closure on the built system adds nothing."""
    members = {root.coeffs for root in rs.positive_roots}
    for root in rs.positive_roots:
        for index in range(rs.rank):
            image = reflect(rs.cartan_matrix, root.coeffs, index)
            if all(c >= 0 for c in image) and any(image) and image not in members:
                return False
    return True


def root_lengths(cartan: CartanMatrix) -> Tuple[Fraction, ...]:
    """
    Squared lengths (alpha_i, alpha_i) of the simple roots, up to a common scale.

    Uses C[i][j] / C[j][i] = |alpha_i|^2 / |alpha_j|^2 along each edge. Each
    connected component is normalised so its shortest root has length^2 2.
    """
    rank = len(cartan)
    lengths: List[Optional[Fraction]] = [None] * rank
    for start in range(rank):
        if lengths[start] is not None:
            continue
        component = [start]
        lengths[start] = Fraction(1)
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(rank):
                if j != i and cartan[i][j] != 0 and lengths[j] is None:
                    lengths[j] = lengths[i] * Fraction(cartan[j][i], cartan[i][j])
                    component.append(j)
                    queue.append(j)
        shortest = min(lengths[i] for i in component)
        for i in component:
            lengths[i] = lengths[i] * 2 / shortest
    return tuple(lengths)


def coroot_pairing(
    rs: RootSystem,
    weight: Sequence[int],
    root: Root,
    include_delta: bool = True,
) -> int:
    """
    <lambda + delta, alpha^vee> (or <lambda, alpha^vee>) for a dominant weight.

    With lambda = sum m_i lambda_i and alpha = sum c_i alpha_i,
    (lambda_i, alpha_j) = delta_ij |alpha_j|^2 / 2, so

        <lambda + delta, alpha^vee> = sum_i c_i (m_i + 1) |alpha_i|^2 / |alpha|^2.

    For A_l and alpha = alpha_i + ... + alpha_{i+r-1} this is
    m_i + ... + m_{i+r-1} + r.

    Args:
        rs: Root system
        weight: Coefficients m_1..m_l over the fundamental weights
        root: A root of rs
        include_delta: Pair lambda + delta (default) or lambda alone

    Returns:
        The pairing as an exact integer

    Raises:
        ParameterError: If lengths do not match the rank
    """
    coeffs = tuple(getattr(weight, "coeffs", weight))
    if len(coeffs) != rs.rank or len(root.coeffs) != rs.rank:
        raise ParameterError(
            f"weight of length {len(coeffs)} and root of length {len(root.coeffs)} do not match rank {rs.rank}"
        )
    lengths = root_lengths(rs.cartan_matrix)
    shift = 1 if include_delta else 0
    numerator = sum(
        Fraction(c) * (m + shift) * lengths[i] for i, (c, m) in enumerate(zip(root.coeffs, coeffs))
    )
    norm = sum(
        Fraction(ci * cj) * rs.cartan_matrix[i][j] * lengths[j] / 2
        for i, ci in enumerate(root.coeffs)
        for j, cj in enumerate(root.coeffs)
    )
    value = numerator / norm
    if value.denominator != 1:
        raise InternalConsistencyError(f"non-integral coroot pairing {value} for root {root.coeffs}")
    return int(value)


def parabolic_split(rs: RootSystem, marked: int) -> ParabolicSplit:
    """
    Split Phi+ by the coefficient of the marked simple root.

    Args:
        rs: Root system
        marked: 1-based index r of the marked simple root

    Returns:
        ParabolicSplit; |phi_n_plus| is the complex dimension of (type, alpha_r)

    Raises:
        ParameterError: If marked is out of range
    """
    if not isinstance(marked, int) or not 1 <= marked <= rs.rank:
        raise ParameterError(f"marked root {marked} outside 1..{rs.rank}")
    phi_1 = tuple(root for root in rs.positive_roots if root.coefficient(marked) == 0)
    phi_n_plus = tuple(root for root in rs.positive_roots if root.coefficient(marked) > 0)
    return ParabolicSplit(root_system=rs, marked_root=marked, phi_1=phi_1, phi_n_plus=phi_n_plus)


def _components(cartan: CartanMatrix, vertices: Iterable[int]) -> List[List[int]]:
    remaining = sorted(vertices)
    pool = set(remaining)
    components = []
    for start in remaining:
        if start not in pool:
            continue
        pool.discard(start)
        component = [start]
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in sorted(pool):
                if cartan[i][j] != 0:
                    pool.discard(j)
                    component.append(j)
                    queue.append(j)
        components.append(sorted(component))
    return components


def classify_cartan(cartan: Sequence[Sequence[int]]) -> Tuple[str, int]:
    """
    Identify a connected Cartan matrix by its diagram pattern.

    Returns:
        (type_label, rank) with type_label in A, B, C, D, E6, E7, E8

    Raises:
        ParameterError: If the pattern is not one of the recognised types
    """
    n = len(cartan)
    neighbours = [[j for j in range(n) if j != i and cartan[i][j] != 0] for i in range(n)]
    degrees = [len(nb) for nb in neighbours]
    multiple = [
        (i, j) for i in range(n) for j in range(n) if i != j and cartan[i][j] < -1
    ]
    if n == 1:
        return ("A", 1)
    if any(d > 3 for d in degrees) or sum(degrees) != 2 * (n - 1):
        raise ParameterError("not a finite-type Dynkin diagram")
    if multiple:
        if len(multiple) != 1 or abs(cartan[multiple[0][0]][multiple[0][1]]) != 2 or max(degrees) > 2:
            raise ParameterError("unrecognised non-simply-laced diagram")
        i, j = multiple[0]
        # C[i][j] = -2 means alpha_j is short relative to alpha_i
        short, long_ = j, i
        if n == 2:
            return ("B", 2)
        if degrees[short] == 1:
            return ("B", n)
        if degrees[long_] == 1:
            return ("C", n)
        raise ParameterError("double bond away from the end of the chain")
    if max(degrees) <= 2:
        return ("A", n)
    branch = degrees.index(3)
    arms = []
    for start in neighbours[branch]:
        length, previous, current = 1, branch, start
        while True:
            onward = [k for k in neighbours[current] if k != previous]
            if not onward:
                break
            previous, current = current, onward[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ("D", n)
    if arms == [1, 2, 2]:
        return ("E6", 6)
    if arms == [1, 2, 3]:
        return ("E7", 7)
    if arms == [1, 2, 4]:
        return ("E8", 8)
    raise ParameterError(f"unrecognised branched diagram with arms {arms}")


def delete_vertices(rs: RootSystem, removed: Iterable[int]) -> List[Tuple[str, int]]:
    """
    Classify the components of the Dynkin diagram with some vertices deleted.

    Args:
        rs: Root system
        removed: 1-based simple root indices to delete

    Returns:
        (type_label, rank) per connected component, ordered by smallest vertex
    """
    removed_set = set(removed)
    if not removed_set <= set(range(1, rs.rank + 1)):
        raise ParameterError(f"vertices {sorted(removed_set)} not all in 1..{rs.rank}")
    kept = [i for i in range(rs.rank) if i + 1 not in removed_set]
    result = []
    for component in _components(rs.cartan_matrix, kept):
        sub = [[rs.cartan_matrix[i][j] for j in component] for i in component]
        result.append(classify_cartan(sub))
    return result


def induced_cartan(rs: RootSystem, kept: Iterable[int]) -> CartanMatrix:
    """Cartan matrix of the subdiagram on the given 1-based vertices."""
    indices = sorted(i - 1 for i in kept)
    return tuple(tuple(rs.cartan_matrix[i][j] for j in indices) for i in indices)


def is_diagram_automorphism(rs: RootSystem, permutation: Dict[int, int]) -> bool:
    """True when the 1-based vertex permutation preserves the Cartan matrix."""
    full = {i: permutation.get(i, i) for i in range(1, rs.rank + 1)}
    if sorted(full.values()) != list(range(1, rs.rank + 1)):
        return False
    return all(
        rs.cartan_matrix[i - 1][j - 1] == rs.cartan_matrix[full[i] - 1][full[j] - 1]
        for i in full
        for j in full
    )


def subdiagram_stable(rs: RootSystem, permutation: Dict[int, int], removed: Iterable[int]) -> bool:
    """True when the permutation maps the complement of `removed` onto itself."""
    removed_set: FrozenSet[int] = frozenset(removed)
    kept = {i for i in range(1, rs.rank + 1) if i not in removed_set}
    return {permutation.get(i, i) for i in kept} == kept


# Diagram automorphism inducing the Cartan involution of EIII (Bourbaki labels)
EIII_INVOLUTION: Dict[int, int] = {1: 6, 6: 1, 3: 5, 5: 3}


def cartan_involution_stable(rs: Optional[RootSystem] = None) -> bool:
    """
    The EIII diagram involution preserves E6 and the A5 left by deleting alpha_2.

    This is the diagram-level reason sl(6) sits in E6 compatibly with the
    symmetry of EIII.
    """
    rs = rs or RootSystemFactory.get("E6", 6)
    return (
        is_diagram_automorphism(rs, EIII_INVOLUTION)
        and subdiagram_stable(rs, EIII_INVOLUTION, {2})
        and delete_vertices(rs, {2}) == [("A", 5)]
    )


def hermitian_marked_roots(max_rank: int) -> List[Tuple[str, str, int, int, int]]:
    """
    The (type, marked root) pairs giving compact irreducible Hermitian symmetric spaces.

    Args:
        max_rank: Largest classical rank to list

    Returns:
        (kind, type_label, rank, marked, expected complex dimension) tuples;
        the dimension comes from the classical closed form, not from roots
    """
    entries: List[Tuple[str, str, int, int, int]] = []
    for rank in range(1, max_rank + 1):
        for r in range(1, rank + 1):
            entries.append(("AIII", "A", rank, r, r * (rank + 1 - r)))
    for rank in range(2, max_rank + 1):
        entries.append(("BDI", "B", rank, 1, 2 * rank - 1))
        entries.append(("CI", "C", rank, rank, rank * (rank + 1) // 2))
    for rank in range(3, max_rank + 1):
        entries.append(("BDI", "D", rank, 1, 2 * rank - 2))
        entries.append(("DIII", "D", rank, rank, rank * (rank - 1) // 2))
    entries.append(("EIII", "E6", 6, 1, 16))
    entries.append(("EVII", "E7", 7, 7, 27))
    return entries


class RootSystemFactory:
    """Factory caching built root systems (they are immutable)."""

    _cache: Dict[Tuple[str, int], RootSystem] = {}
    _lock = threading.Lock()

    @classmethod
    def get(cls, type_label: str, rank: int) -> RootSystem:
        """
        Get or build a root system.

        Args:
            type_label: One of A, B, C, D, E6, E7
            rank: Rank of the system

        Returns:
            Cached RootSystem instance
        """
        key = (type_label, rank)
        with cls._lock:
            if key not in cls._cache:
                cls._cache[key] = build_root_system(type_label, rank)
            return cls._cache[key]

    @classmethod
    def clear_cache(cls):
        """Clear the root system cache."""
        with cls._lock:
            cls._cache.clear()
