"""Schubert varieties in Gr(d, n), the Grassmannian of projective d-planes in P^n.

An index (a_0, ..., a_d) with 0 <= a_0 < ... < a_d <= n names the variety of
d-planes meeting the flag subspace P^{a_i} in dimension at least i. In this
dimension convention

    k = sum(a_i) - d(d+1)/2,
    deg = k! / (a_0! ... a_d!) * prod_{i<j} (a_j - a_i),

Omega(0, 1, ..., d) is a point and Omega(1, 2, ..., d+1) is the P^{d+1} of
d-planes inside a fixed P^{d+1}.

The Pieri oracle works in the codimension convention: dual_index maps
(a_0..a_d) to (n - a_d, ..., n - a_0), the hyperplane class raises one
entry by one, and the point class is (n-d, ..., n).
"""

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import factorial, prod
from typing import Dict, Iterator, Tuple

from utils.errors import InternalConsistencyError, ParameterError
from utils.logging import get_logger

logger = get_logger("schubert")


@dataclass(frozen=True)
class SchubertIndex:
    """Omega(a_0, ..., a_d) inside Gr(d, n)."""

    a: Tuple[int, ...]
    d: int
    n: int

    def __post_init__(self):
        if self.d < 0 or self.n <= self.d:
            raise ParameterError(f"Gr({self.d}, {self.n}) needs 0 <= d < n")
        if len(self.a) != self.d + 1:
            raise ParameterError(f"index {self.a} needs {self.d + 1} entries for d = {self.d}")
        if self.a[0] < 0 or self.a[-1] > self.n:
            raise ParameterError(f"index {self.a} leaves 0..{self.n}")
        if any(x >= y for x, y in zip(self.a, self.a[1:])):
            raise ParameterError(f"index {self.a} is not strictly increasing")

    @classmethod
    def parse(cls, text: str, ambient: str) -> "SchubertIndex":
        """Build from comma-separated strings, e.g. ("1,2,3", "2,5")."""
        try:
            a = tuple(int(x) for x in text.split(","))
            d, n = (int(x) for x in ambient.split(","))
        except ValueError as e:
            raise ParameterError(f"cannot parse index {text!r} / ambient {ambient!r}") from e
        return cls(a=a, d=d, n=n)


# class in Gr(d, n) as {codimension-convention index: coefficient}
CohomologyClass = Dict[Tuple[int, ...], int]


def schubert_dimension(idx: SchubertIndex) -> int:
    """k = sum(a_i) - d(d+1)/2."""
    return sum(idx.a) - idx.d * (idx.d + 1) // 2


def schubert_degree(idx: SchubertIndex) -> int:
    """
    Degree of Omega(a) under the Pluecker embedding.

    Raises:
        InternalConsistencyError: If the factorial quotient is not integral
    """
    k = schubert_dimension(idx)
    numerator = factorial(k) * prod(idx.a[j] - idx.a[i] for i, j in combinations(range(idx.d + 1), 2))
    denominator = prod(factorial(x) for x in idx.a)
    if numerator % denominator:
        raise InternalConsistencyError(f"degree of {idx.a} is {numerator}/{denominator}, not an integer")
    return numerator // denominator


def dual_index(idx: SchubertIndex) -> Tuple[int, ...]:
    """(n - a_d, ..., n - a_0): the codimension-convention index of the same variety."""
    return tuple(idx.n - x for x in reversed(idx.a))


def from_dual(b: Tuple[int, ...], d: int, n: int) -> SchubertIndex:
    """Inverse of dual_index."""
    return SchubertIndex(a=tuple(n - x for x in reversed(b)), d=d, n=n)


def point_class(d: int, n: int) -> Tuple[int, ...]:
    """Codimension-convention index of a point."""
    return tuple(range(n - d, n + 1))


def pieri_multiply(c: CohomologyClass, d: int, n: int) -> CohomologyClass:
    """
    Multiply by the hyperplane class.

    Each term b is sent to the sum of all b' obtained by raising one entry by
    one while keeping entries strictly increasing and at most n. The point
    class has no such b' and goes to zero.
    """
    result: Counter = Counter()
    for b, coeff in c.items():
        for i in range(d + 1):
            raised = b[i] + 1
            limit = b[i + 1] if i < d else n + 1
            if raised < limit:
                result[b[:i] + (raised,) + b[i + 1:]] += coeff
    return {b: coeff for b, coeff in sorted(result.items()) if coeff}


def pieri_degree_oracle(idx: SchubertIndex) -> int:
    """Iterate pieri_multiply k times from Omega(a) and read off the point coefficient."""
    k = schubert_dimension(idx)
    current: CohomologyClass = {dual_index(idx): 1}
    for _ in range(k):
        current = pieri_multiply(current, idx.d, idx.n)
    return current.get(point_class(idx.d, idx.n), 0)


def grassmannian_index(d: int, n: int) -> SchubertIndex:
    """Omega(n-d, ..., n), the whole Grassmannian."""
    return SchubertIndex(a=tuple(range(n - d, n + 1)), d=d, n=n)


def linear_index(d: int, n: int) -> SchubertIndex:
    """Omega(1, 2, ..., d+1): the d-planes inside a fixed P^{d+1}."""
    return SchubertIndex(a=tuple(range(1, d + 2)), d=d, n=n)


def line_index_projective(d: int, n: int) -> SchubertIndex:
    """
    A line of d-planes: Omega(0, 1, ..., d-1, d+1).

    The d-planes containing a fixed P^{d-1} inside a fixed P^{d+1}.
    """
    return SchubertIndex(a=tuple(range(d)) + (d + 1,), d=d, n=n)


def line_index_vector(d: int) -> Tuple[int, ...]:
    """The same line written with vector-space dimensions: (1, ..., d, d+2)."""
    return tuple(range(1, d + 1)) + (d + 2,)


def vector_to_projective(b: Tuple[int, ...]) -> Tuple[int, ...]:
    """Shift vector-space dimensions to projective ones."""
    return tuple(x - 1 for x in b)


def iter_indices(d: int, n: int) -> Iterator[SchubertIndex]:
    """Every valid index of Gr(d, n) in lexicographic order."""
    for a in combinations(range(n + 1), d + 1):
        yield SchubertIndex(a=a, d=d, n=n)
