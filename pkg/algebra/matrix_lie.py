"""Matrix Lie algebras with Cartan decompositions, Lie triple systems and bilinear forms.

All matrices are sympy ImmutableMatrix instances with Gaussian-rational
entries. Membership questions reduce to exact ranks (utils.linalg).

so(m+2) = k + p for the quadric Q_m: k = so(2) + so(m), and p is spanned by

    X_i = E_{2+i,1} - E_{1,2+i},   Y_i = E_{2+i,2} - E_{2,2+i}   (i = 1..m, 1-based)

so an element of p is a pair (xi, eta) of column vectors in R^m. The complex
structure is J(xi, eta) = (-eta, xi), i.e. J X_i = Y_i and J Y_i = -X_i; it is
ad of the so(2) generator E_21 - E_12.
"""

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import sympy as sp

from utils.errors import ParameterError
from utils.linalg import coordinates, in_span, is_gaussian_rational, matrix_of_map, rank
from utils.logging import get_logger

logger = get_logger("matrix_lie")

ExactMatrix = sp.ImmutableMatrix


def exact_matrix(rows) -> ExactMatrix:
    """Build an ExactMatrix, rejecting entries that are not Gaussian rationals."""
    mat = sp.ImmutableMatrix(rows)
    for entry in mat:
        if not is_gaussian_rational(entry):
            raise ParameterError(f"entry {entry} is not a Gaussian rational")
    return mat


def elementary(size: int, i: int, j: int) -> ExactMatrix:
    """E_ij (1-based)."""
    return sp.ImmutableMatrix(size, size, lambda r, c: 1 if (r, c) == (i - 1, j - 1) else 0)


def rotation(size: int, i: int, j: int) -> ExactMatrix:
    """E_ij - E_ji (1-based)."""
    return elementary(size, i, j) - elementary(size, j, i)


def bracket(x: ExactMatrix, y: ExactMatrix) -> ExactMatrix:
    """[x, y] = xy - yx."""
    if x.shape != y.shape or x.shape[0] != x.shape[1]:
        raise ParameterError(f"cannot bracket matrices of shapes {x.shape} and {y.shape}")
    return sp.ImmutableMatrix((x * y - y * x).applyfunc(sp.expand))


def _blocks(a, b, c, d) -> sp.Matrix:
    """[[a, b], [c, d]]."""
    return sp.Matrix.vstack(sp.Matrix.hstack(a, b), sp.Matrix.hstack(c, d))


def _flat(x: ExactMatrix) -> List[sp.Expr]:
    return list(x)


def span_contains(basis: Sequence[ExactMatrix], x: ExactMatrix) -> bool:
    """Exact membership of x in the span of the matrices."""
    return in_span([_flat(b) for b in basis], _flat(x))


def span_rank(basis: Sequence[ExactMatrix]) -> int:
    return rank([_flat(b) for b in basis])


@dataclass
class CartanPair:
    """Bases of k and p with the complex structure J on p in p-basis coordinates."""

    k_basis: List[ExactMatrix]
    p_basis: List[ExactMatrix]
    J: ExactMatrix
    ambient_label: str

    def p_coordinates(self, x: ExactMatrix) -> List[sp.Expr]:
        """Coordinates of x in the p basis."""
        coords = coordinates([_flat(b) for b in self.p_basis], _flat(x))
        if coords is None:
            raise ParameterError(f"matrix is not in p of {self.ambient_label}")
        return coords

    def from_coordinates(self, coords: Sequence) -> ExactMatrix:
        total = sp.zeros(*self.p_basis[0].shape)
        for c, b in zip(coords, self.p_basis):
            total += c * b
        return sp.ImmutableMatrix(total.applyfunc(sp.expand))

    def apply_J(self, x: ExactMatrix) -> ExactMatrix:
        """J x for x in p."""
        coords = sp.Matrix(self.p_coordinates(x))
        return self.from_coordinates(list(self.J * coords))

    def vector(self, xi: Sequence, eta: Sequence) -> ExactMatrix:
        """The element (xi, eta) = sum xi_i X_i + eta_i Y_i of p."""
        m = len(self.p_basis) // 2
        if len(xi) != m or len(eta) != m:
            raise ParameterError(f"xi and eta need length {m}")
        return self.from_coordinates(list(xi) + list(eta))

    def to_dict(self) -> Dict[str, object]:
        """JSON shape for the verify report."""
        return {
            "ambient": self.ambient_label,
            "k_basis": [[[str(e) for e in row] for row in b.tolist()] for b in self.k_basis],
            "p_basis": [[[str(e) for e in row] for row in b.tolist()] for b in self.p_basis],
            "J": [[str(e) for e in row] for row in self.J.tolist()],
        }


def quadric_pair(m: int) -> CartanPair:
    """so(m+2) = (so(2) + so(m)) + p for any m >= 1."""
    if m < 1:
        raise ParameterError(f"quadric pair needs m >= 1, got {m}")
    size = m + 2
    k_basis = [rotation(size, 2, 1)]
    k_basis += [rotation(size, b, a) for a in range(3, size + 1) for b in range(a + 1, size + 1)]
    xs = [rotation(size, 2 + i, 1) for i in range(1, m + 1)]
    ys = [rotation(size, 2 + i, 2) for i in range(1, m + 1)]
    identity = sp.eye(m)
    J = sp.ImmutableMatrix(_blocks(sp.zeros(m), -identity, identity, sp.zeros(m)))
    return CartanPair(k_basis=k_basis, p_basis=xs + ys, J=J, ambient_label=f"so({size})")


def build_bdi_pair(m: int) -> CartanPair:
    """
    Cartan pair of the quadric Q_m = SO(m+2)/SO(2)xSO(m).

    Args:
        m: Quadric dimension, at least 3

    Returns:
        CartanPair with dim p = 2m and dim k = 1 + m(m-1)/2

    Raises:
        ParameterError: If m < 3
    """
    if m < 3:
        raise ParameterError(f"BDI pair needs m >= 3, got {m}")
    return quadric_pair(m)


def check_cartan_pair(pair: CartanPair) -> Dict[str, bool]:
    """
    Evaluate the structural identities of a Cartan pair generator-wise.

    Returns:
        Flags kk_in_k, kp_in_p, pp_in_k, J_squared, J_equivariant
    """
    k, p = pair.k_basis, pair.p_basis
    flags = {
        "kk_in_k": all(span_contains(k, bracket(a, b)) for i, a in enumerate(k) for b in k[i + 1:]),
        "kp_in_p": all(span_contains(p, bracket(a, b)) for a in k for b in p),
        "pp_in_k": all(span_contains(k, bracket(a, b)) for i, a in enumerate(p) for b in p[i + 1:]),
        "J_squared": (pair.J * pair.J) == -sp.eye(len(p)),
    }
    equivariant = True
    for a in k:
        ad_a = matrix_of_map([_flat(b) for b in p], [_flat(bracket(a, b)) for b in p])
        if ad_a * pair.J != pair.J * ad_a:
            equivariant = False
            break
    flags["J_equivariant"] = equivariant
    logger.debug("%s cartan pair flags: %s", pair.ambient_label, flags)
    return flags


def _require_in_p(n_basis: Sequence[ExactMatrix], pair: CartanPair) -> None:
    for index, x in enumerate(n_basis):
        if not span_contains(pair.p_basis, x):
            raise ParameterError(f"basis element {index} is not in p of {pair.ambient_label}")


def is_lie_triple_system(
    n_basis: Sequence[ExactMatrix], pair: CartanPair
) -> Tuple[bool, Optional[Tuple[int, int, int]]]:
    """
    Test [[n, n], n] in n on basis triples.

    Returns:
        (True, None), or (False, (a, b, c)) with [[n_a, n_b], n_c] outside n

    Raises:
        ParameterError: If some basis element is not in p
    """
    _require_in_p(n_basis, pair)
    for a in range(len(n_basis)):
        for b in range(a + 1, len(n_basis)):
            inner = bracket(n_basis[a], n_basis[b])
            for c in range(len(n_basis)):
                if not span_contains(n_basis, bracket(inner, n_basis[c])):
                    return False, (a, b, c)
    return True, None


def is_J_stable(n_basis: Sequence[ExactMatrix], pair: CartanPair) -> bool:
    """J n in n."""
    _require_in_p(n_basis, pair)
    return all(span_contains(n_basis, pair.apply_J(x)) for x in n_basis)


def complex_line_kind(xi: Sequence, eta: Sequence) -> Optional[str]:
    """
    Which totally geodesic curve the complex line through Z = xi + i eta spans in Q_m.

    Returns:
        "conic" when Z is real up to a phase, "projective_line" when Z.Z = 0,
        None when span{Z, JZ} is not a Lie triple system
    """
    xi_v, eta_v = sp.Matrix(xi), sp.Matrix(eta)
    if sp.Matrix.hstack(xi_v, eta_v).rank() <= 1:
        return "conic"
    if sp.expand(xi_v.dot(xi_v) - eta_v.dot(eta_v)) == 0 and sp.expand(xi_v.dot(eta_v)) == 0:
        return "projective_line"
    return None


def random_j_stable_subspace(pair: CartanPair, r: int, rng: random.Random) -> List[ExactMatrix]:
    """span{v_1, J v_1, ..., v_r, J v_r} for random small-integer v_i."""
    m = len(pair.p_basis) // 2
    basis: List[ExactMatrix] = []
    while len(basis) < 2 * r:
        xi = [rng.randint(-2, 2) for _ in range(m)]
        eta = [rng.randint(-2, 2) for _ in range(m)]
        v = pair.vector(xi, eta)
        candidate = basis + [v, pair.apply_J(v)]
        if span_rank(candidate) == len(candidate):
            basis = candidate
    return basis


def so3_generators() -> Tuple[ExactMatrix, ExactMatrix]:
    """X_1 = E_31 - E_13 and X_2 = E_32 - E_23 in so(4)."""
    return rotation(4, 3, 1), rotation(4, 3, 2)


def so3_triple_system() -> Tuple[List[ExactMatrix], CartanPair]:
    """The two-parameter family a X_1 + b X_2 in so(4) with its ambient pair."""
    x1, x2 = so3_generators()
    return [x1, x2], quadric_pair(2)


# su(n+1) elements are pairs (A, B) standing for A + iB with A, B real


def _validate_su(a: ExactMatrix, b: ExactMatrix) -> None:
    if a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise ParameterError(f"A and B need equal square shapes, got {a.shape} and {b.shape}")
    for entry in list(a) + list(b):
        if not sp.sympify(entry).is_Rational:
            raise ParameterError(f"A and B must have real rational entries, got {entry}")
    if a.T != -a:
        raise ParameterError("A must be antisymmetric")
    if b.T != b:
        raise ParameterError("B must be symmetric")
    if b.trace() != 0:
        raise ParameterError("A + iB must be traceless")


def su_to_so(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """
    Realise A + iB in su(N) as the real matrix [[A, B], [-B, A]] in so(2N).

    Raises:
        ParameterError: If A + iB is not skew-Hermitian and traceless
    """
    a, b = sp.ImmutableMatrix(a), sp.ImmutableMatrix(b)
    _validate_su(a, b)
    return sp.ImmutableMatrix(_blocks(a, b, -b, a))


def su_bracket(x: Tuple[ExactMatrix, ExactMatrix], y: Tuple[ExactMatrix, ExactMatrix]):
    """[A + iB, C + iD] as a pair."""
    a, b = x
    c, d = y
    return (
        sp.ImmutableMatrix(a * c - c * a - (b * d - d * b)),
        sp.ImmutableMatrix(a * d - d * a + b * c - c * b),
    )


def su_basis(n: int) -> List[Tuple[ExactMatrix, ExactMatrix]]:
    """A basis of su(n+1) as (A, B) pairs; n^2 + 2n elements."""
    if n < 1:
        raise ParameterError(f"su(n+1) needs n >= 1, got {n}")
    size = n + 1
    zero = sp.ImmutableMatrix(sp.zeros(size))
    basis = []
    for i in range(1, size + 1):
        for j in range(i + 1, size + 1):
            basis.append((rotation(size, i, j), zero))
            basis.append((zero, elementary(size, i, j) + elementary(size, j, i)))
    for i in range(1, size):
        basis.append((zero, elementary(size, i, i) - elementary(size, i + 1, i + 1)))
    return basis


@dataclass
class BilinearForm:
    """A nondegenerate symmetric or skew form v^T M w."""

    matrix: ExactMatrix
    kind: str
    label: str = field(default="")

    def __post_init__(self):
        self.matrix = sp.ImmutableMatrix(self.matrix)
        if self.kind not in ("symmetric", "skew"):
            raise ParameterError(f"form kind must be symmetric or skew, got {self.kind!r}")
        sign = 1 if self.kind == "symmetric" else -1
        if self.matrix.T != sign * self.matrix:
            raise ParameterError(f"matrix is not {self.kind}")
        if self.matrix.det() == 0:
            raise ParameterError("form is degenerate")

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    def __call__(self, v: Sequence, w: Sequence) -> sp.Expr:
        if len(v) != self.size or len(w) != self.size:
            raise ParameterError(f"vectors of length {len(v)}, {len(w)} for a form of size {self.size}")
        return sp.expand((sp.Matrix(v).T * self.matrix * sp.Matrix(w))[0, 0])


def symplectic_form(n: int) -> BilinearForm:
    """[[0, -I_n], [I_n, 0]] on C^{2n}."""
    identity = sp.eye(n)
    matrix = _blocks(sp.zeros(n), -identity, identity, sp.zeros(n))
    return BilinearForm(matrix=matrix, kind="skew", label=f"symplectic({2 * n})")


def split_symmetric_form(n: int) -> BilinearForm:
    """S_n = [[0, I_n], [I_n, 0]] on C^{2n}."""
    identity = sp.eye(n)
    matrix = _blocks(sp.zeros(n), identity, identity, sp.zeros(n))
    return BilinearForm(matrix=matrix, kind="symmetric", label=f"split({2 * n})")


def euclidean_form(size: int) -> BilinearForm:
    """z_0^2 + ... + z_{size-1}^2."""
    return BilinearForm(matrix=sp.eye(size), kind="symmetric", label=f"euclidean({size})")


def isotropy_check(subspace_basis: Sequence[Sequence], form: BilinearForm) -> bool:
    """True iff the form vanishes on every pair of basis vectors."""
    return all(form(v, w) == 0 for i, v in enumerate(subspace_basis) for w in subspace_basis[i:])


def unit_vector(size: int, index: int) -> List[sp.Integer]:
    """e_index (1-based)."""
    return [sp.Integer(1 if i == index - 1 else 0) for i in range(size)]


def ci_subspaces(n: int) -> Tuple[List[List[sp.Integer]], List[List[sp.Integer]]]:
    """V_1 = {z_1 = ... = z_n = 0} and V_2 = {z_i + z_{n+i} = 0} in C^{2n}."""
    v1 = [unit_vector(2 * n, n + i) for i in range(1, n + 1)]
    v2 = [[a - b for a, b in zip(unit_vector(2 * n, i), unit_vector(2 * n, n + i))] for i in range(1, n + 1)]
    return v1, v2


def diii_subspaces(n: int) -> Tuple[List[List[sp.Integer]], List[List[sp.Integer]]]:
    """V_1 = <e_1..e_n> and V_2 = <e_{n+1}..e_{2n}> in C^{2n}."""
    v1 = [unit_vector(2 * n, i) for i in range(1, n + 1)]
    v2 = [unit_vector(2 * n, n + i) for i in range(1, n + 1)]
    return v1, v2
