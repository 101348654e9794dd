"""Pluecker coordinates and degrees of parametrized curves in Grassmannians.

A curve is given by a k x N matrix whose entries are homogeneous polynomials
in (u0, u1); its rows span the moving k-dimensional subspace of C^N. The
Pluecker vector lists the maximal minors over column subsets in
lexicographic order, and the degree of the curve is their common degree
after the polynomial gcd is divided out.

Trigonometric curves use the symbols c, s with the single relation
c^2 + s^2 = 1.
"""

import random
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations, product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import sympy as sp
from sympy.polys.domains import QQ_I

from algebra.matrix_lie import (
    BilinearForm,
    ci_subspaces,
    diii_subspaces,
    euclidean_form,
    isotropy_check,
    split_symmetric_form,
    symplectic_form,
    unit_vector,
)
from config.settings import RANDOM_SEED, WITNESS_GRID
from utils.errors import DegenerateInputError, ParameterError, SearchExhaustedError
from utils.linalg import in_span, kernel_line, rank
from utils.logging import get_logger

logger = get_logger("pluecker")

U0, U1 = sp.symbols("u0 u1")
C, S = sp.symbols("c s")
_T = sp.Symbol("t")


@dataclass
class ParamSubspace:
    """Rows spanning a k-dimensional subspace of C^N that moves with (u0, u1)."""

    rows: sp.ImmutableMatrix
    label: str = ""

    def __post_init__(self):
        self.rows = sp.ImmutableMatrix(self.rows).applyfunc(sp.expand)
        for entry in self.rows:
            if entry.free_symbols - {U0, U1}:
                raise ParameterError(f"entry {entry} uses symbols other than u0, u1")
            if not entry.is_polynomial(U0, U1):
                raise ParameterError(f"entry {entry} is not polynomial in u0, u1")
        for i in range(self.rows.shape[0]):
            orders = {sp.Poly(e, U0, U1).homogeneous_order() for e in self.rows.row(i) if e != 0}
            if None in orders or len(orders) > 1:
                raise ParameterError(f"row {i} is not homogeneous of one degree in u0, u1")

    @property
    def k(self) -> int:
        return self.rows.shape[0]

    @property
    def N(self) -> int:
        return self.rows.shape[1]

    def at(self, u0, u1) -> sp.Matrix:
        return self.rows.subs({U0: u0, U1: u1})

    def generic_rank(self, samples: int = 3, seed: int = RANDOM_SEED) -> int:
        """Largest rank seen at a few pseudo-random rational parameter values."""
        rng = random.Random(seed)
        best = 0
        for _ in range(samples):
            point = (sp.Rational(rng.randint(-9, 9), rng.randint(1, 9)), sp.Rational(rng.randint(1, 9), rng.randint(1, 9)))
            values = self.at(*point)
            best = max(best, rank(values.tolist()))
        return best


def pluecker_coords(s: ParamSubspace) -> List[sp.Expr]:
    """
    Maximal minors of the row matrix over column subsets in lexicographic order.

    Raises:
        DegenerateInputError: If the rows drop rank at every sample parameter
    """
    if s.k > s.N:
        raise DegenerateInputError(f"{s.k} rows cannot be independent in C^{s.N}")
    sampled = s.generic_rank()
    if sampled != s.k:
        raise DegenerateInputError(f"{s.label or 'subspace'} has rank {sampled} < {s.k} at every sample point")
    coords = [
        sp.expand(s.rows.extract(list(range(s.k)), list(cols)).det())
        for cols in combinations(range(s.N), s.k)
    ]
    return coords


def pluecker_index(N: int, k: int) -> List[Tuple[int, ...]]:
    """Column subsets labelling the Pluecker coordinates."""
    return list(combinations(range(N), k))


def curve_degree(s: ParamSubspace) -> int:
    """
    Degree of the curve traced in the Pluecker embedding.

    Computed on the affine chart u1 = 1 as
    max_j deg f_j(t, 1) - deg gcd_j f_j(t, 1), which equals the homogeneous
    degree of the minors minus the degree of their common factor.
    """
    coords = [c for c in pluecker_coords(s) if c != 0]
    polys = [sp.Poly(c.subs({U0: _T, U1: 1}), _T, domain=QQ_I) for c in coords]
    polys = [p for p in polys if not p.is_zero]
    common = reduce(lambda a, b: a.gcd(b), polys)
    degree = max(p.degree() for p in polys) - common.degree()
    logger.debug("%s: %d nonzero minors, degree %d", s.label, len(coords), degree)
    return degree


def _signed(coords: Dict[Tuple[int, ...], sp.Expr], cols: Sequence[int]) -> sp.Expr:
    if len(set(cols)) != len(cols):
        return sp.Integer(0)
    order = sorted(range(len(cols)), key=lambda i: cols[i])
    inversions = sum(1 for i in range(len(order)) for j in range(i + 1, len(order)) if order[i] > order[j])
    return (-1) ** inversions * coords[tuple(sorted(cols))]


def pluecker_relations_hold(vec: Sequence[sp.Expr], k: int, N: int, limit: Optional[int] = None) -> bool:
    """
    Check sum_l (-1)^l p[I + j_l] p[J - j_l] = 0 for (k-1)-subsets I and (k+1)-subsets J.

    Args:
        vec: Pluecker vector in lexicographic order
        limit: Stop after this many (I, J) pairs (None checks all)
    """
    coords = dict(zip(pluecker_index(N, k), vec))
    checked = 0
    for I in combinations(range(N), k - 1):
        for J in combinations(range(N), k + 1):
            total = sum(
                (-1) ** l * _signed(coords, I + (J[l],)) * _signed(coords, J[:l] + J[l + 1:])
                for l in range(k + 1)
            )
            if sp.expand(total) != 0:
                return False
            checked += 1
            if limit is not None and checked >= limit:
                return True
    return True


def trig_normal_form(expr) -> sp.Expr:
    """
    Reduce a polynomial in c, s modulo c^2 + s^2 - 1.

    Every s^k becomes s^(k mod 2) (1 - c^2)^(k // 2), so the result has
    s-degree at most one.
    """
    expr = sp.expand(sp.sympify(expr))
    if not expr.is_polynomial(S):
        raise ParameterError(f"{expr} is not polynomial in s")
    poly = sp.Poly(expr, S)
    reduced = sum(
        coeff * S ** (power % 2) * (1 - C ** 2) ** (power // 2)
        for (power,), coeff in poly.terms()
    )
    return sp.expand(reduced)


def quadric_membership(point: Sequence, q: Optional[BilinearForm] = None) -> Tuple[bool, bool]:
    """
    Whether a parametrized point family lies on the quadric q(z, z) = 0.

    Args:
        point: Coordinates, polynomial in (u0, u1) and/or (c, s)
        q: Symmetric form (default z_0^2 + ... + z_{N-1}^2)

    Returns:
        (holds, degenerate); the zero family holds vacuously and is flagged degenerate
    """
    point = [sp.expand(sp.sympify(z)) for z in point]
    q = q or euclidean_form(len(point))
    degenerate = all(z == 0 for z in point)
    value = trig_normal_form(q(point, point))
    return value == 0, degenerate


def point_curve(point: Sequence, label: str = "") -> ParamSubspace:
    """A curve in projective space as a one-row subspace."""
    return ParamSubspace(rows=sp.ImmutableMatrix([list(point)]), label=label)


def reparametrize(s: ParamSubspace, matrix: Sequence[Sequence]) -> ParamSubspace:
    """Substitute (u0, u1) -> matrix * (u0, u1)."""
    (a, b), (c, d) = matrix
    if sp.Matrix(matrix).det() == 0:
        raise ParameterError("reparametrization matrix is singular")
    rows = s.rows.subs({U0: a * U0 + b * U1, U1: c * U0 + d * U1}, simultaneous=True)
    return ParamSubspace(rows=rows, label=s.label)


def row_transform(s: ParamSubspace, matrix: Sequence[Sequence]) -> ParamSubspace:
    """
    Replace the rows by an invertible constant combination of them.

    Only rows of the same degree may be combined; the result must stay homogeneous row by row.
    """
    g = sp.Matrix(matrix)
    if g.shape != (s.k, s.k) or g.det() == 0:
        raise ParameterError("row transformation must be an invertible k x k matrix")
    return ParamSubspace(rows=g * s.rows, label=s.label)


# Map builders


def grassmannian_line(k: int, N: int) -> ParamSubspace:
    """<e_0, ..., e_{k-2}, u0 e_{k-1} + u1 e_k> in C^N: a line in G(k, N)."""
    if k < 1 or N < k + 1:
        raise ParameterError(f"need 1 <= k < N, got k={k}, N={N}")
    rows = [unit_vector(N, i + 1) for i in range(k - 1)]
    rows.append([U0 if i == k - 1 else U1 if i == k else 0 for i in range(N)])
    return ParamSubspace(rows=sp.ImmutableMatrix(rows), label=f"line in G({k},{N})")


def veronese_conic() -> ParamSubspace:
    """(u0^2 - u1^2, i(u0^2 + u1^2), 2 u0 u1, 0): a conic on z_0^2 + z_1^2 + z_2^2 = 0, z_3 = 0."""
    return point_curve(
        [U0 ** 2 - U1 ** 2, sp.I * (U0 ** 2 + U1 ** 2), 2 * U0 * U1, 0],
        label="veronese conic",
    )


def segre_point(u: Sequence, v: Sequence) -> List[sp.Expr]:
    """P^1 x P^1 onto Q_2 in P^3."""
    (u0, u1), (v0, v1) = u, v
    return [
        sp.expand(u0 * v0 + u1 * v1),
        sp.expand(sp.I * (u0 * v0 - u1 * v1)),
        sp.expand(u0 * v1 - u1 * v0),
        sp.expand(sp.I * (u0 * v1 + u1 * v0)),
    ]


def segre_line(m: int) -> ParamSubspace:
    """One ruling line of Q_2 (v = (0, 1)) padded into Q_m in P^{m+1}."""
    if m < 2:
        raise ParameterError(f"segre line needs m >= 2, got {m}")
    point = segre_point((U0, U1), (0, 1)) + [0] * (m - 2)
    return point_curve(point, label=f"segre line in Q_{m}")


def ci_degree_one_line(n: int) -> ParamSubspace:
    """<e_1, ..., e_{n-1}, u0 e_n + u1 e_{2n}>: isotropic for the symplectic form."""
    if n < 2:
        raise ParameterError(f"CI line needs n >= 2, got {n}")
    size = 2 * n
    rows = [unit_vector(size, i) for i in range(1, n)]
    rows.append([U0 if i == n - 1 else U1 if i == size - 1 else 0 for i in range(size)])
    return ParamSubspace(rows=sp.ImmutableMatrix(rows), label=f"CI({n}) degree-one line")


def geodesic_circle(k: int, N: int) -> sp.ImmutableMatrix:
    """<e_0, ..., e_{k-2}, c e_{k-1} + s e_k> with c = cos(t/2), s = sin(t/2), as a row matrix in c, s."""
    return grassmannian_line(k, N).rows.subs({U0: C, U1: S}, simultaneous=True)


def circle_on_line(rows: sp.ImmutableMatrix) -> bool:
    """Whether the Pluecker image of a circle is [c : s] on a coordinate line of P(Lambda^k C^N)."""
    k, N = rows.shape
    minors = [sp.expand(rows.extract(list(range(k)), list(cols)).det()) for cols in combinations(range(N), k)]
    return sorted((m for m in minors if m != 0), key=str) == [C, S]


def so3_geodesics() -> Dict[str, List[sp.Expr]]:
    """The two geodesic circles c1 = [1, i c, i s, 0] and c2 = [c, i, s, 0]."""
    return {
        "c1": [sp.Integer(1), sp.I * C, sp.I * S, sp.Integer(0)],
        "c2": [C, sp.I, S, sp.Integer(0)],
    }


def lagrangian_extension(
    L_basis: Sequence[Sequence], form: BilinearForm, V2_basis: Sequence[Sequence]
) -> List[List[sp.Expr]]:
    """
    W = L + (L^perp cap V2) for L of codimension one in V1.

    Entries may be polynomial in (u0, u1); the extra vector is then polynomial too.

    Returns:
        Basis of W: the rows of L followed by the spanning vector of L^perp cap V2

    Raises:
        ParameterError: If L does not have dimension dim V2 - 1
        DegenerateInputError: If dim(L^perp cap V2) != 1 or W is not totally isotropic
    """
    n = len(V2_basis)
    if len(L_basis) != n - 1:
        raise ParameterError(f"L must have dimension {n - 1}, got {len(L_basis)}")
    pairing_rows = [[form(l, v2) for v2 in V2_basis] for l in L_basis]
    coeffs = kernel_line(pairing_rows) if pairing_rows else [sp.Integer(1)]
    if all(sp.expand(c) == 0 for c in coeffs):
        raise DegenerateInputError("L^perp cap V2 is not one-dimensional")
    extra = [sp.expand(sum(c * v2[i] for c, v2 in zip(coeffs, V2_basis))) for i in range(form.size)]
    W = [list(l) for l in L_basis] + [extra]
    if not isotropy_check(W, form):
        raise DegenerateInputError("extension is not totally isotropic; L must lie in an isotropic V1")
    return W


def _pencil_setup(kind: str, n: int) -> Tuple[BilinearForm, List[List[sp.Integer]], List[List[sp.Integer]]]:
    if kind == "CI":
        v1, v2 = ci_subspaces(n)
        return symplectic_form(n), v1, v2
    if kind == "DIII":
        v1, v2 = diii_subspaces(n)
        return split_symmetric_form(n), v1, v2
    raise ParameterError(f"pencil kind must be CI or DIII, got {kind!r}")


def isotropic_pencil(
    kind: str,
    n: int,
    f: Optional[Sequence] = None,
    g: Optional[Sequence] = None,
) -> ParamSubspace:
    """
    A line of hyperplanes L(u) = W0 + <u0 f + u1 g> in V1, extended to W(u) = L + (L^perp cap V2).

    Defaults: W0 = first n-2 basis vectors of V1, f and g the last two.
    """
    if n < 2:
        raise ParameterError(f"pencil needs n >= 2, got {n}")
    form, v1, v2 = _pencil_setup(kind, n)
    f = list(f) if f is not None else v1[n - 2]
    g = list(g) if g is not None else v1[n - 1]
    moving = [sp.expand(U0 * a + U1 * b) for a, b in zip(f, g)]
    L = v1[: n - 2] + [moving]
    W = lagrangian_extension(L, form, v2)
    return ParamSubspace(rows=sp.ImmutableMatrix(W), label=f"{kind}({n}) pencil")


def pencil_degree_split(kind: str, n: int) -> Tuple[int, int, int]:
    """(degree of L in G(n-1, V1), degree of the V2 line, degree of W)."""
    pencil = isotropic_pencil(kind, n)
    L = ParamSubspace(rows=pencil.rows.extract(list(range(n - 1)), list(range(2 * n))), label="L part")
    extra = point_curve(list(pencil.rows.row(n - 1)), label="V2 part")
    return curve_degree(L), curve_degree(extra), curve_degree(pencil)


@dataclass
class Witness:
    """An n-plane through v inside L + <v> on which the form does not vanish."""

    basis: List[List[sp.Expr]]
    method: str
    pair: Tuple[int, int]
    value: sp.Expr


def _nonisotropic_pair(basis: Sequence[Sequence], form: BilinearForm) -> Optional[Tuple[int, int, sp.Expr]]:
    for i, v in enumerate(basis):
        for j in range(i, len(basis)):
            value = form(v, basis[j])
            if value != 0:
                return i, j, value
    return None


def hyperplane_witness(n: int, v: Sequence, L_basis: Sequence[Sequence], form: BilinearForm) -> Witness:
    """
    Find an n-dimensional subspace of B = L + <v> through v that is not isotropic.

    Tries the coordinate hyperplanes L_i of L first (P_i = L_i + <v>), then
    every P = <v> + ker(phi) for functionals phi on L with coefficients in
    WITNESS_GRID.

    Raises:
        ParameterError: If L is not isotropic of dimension n, v lies in L, v is not isotropic, or n is outside 2..5
        SearchExhaustedError: If no witness is found
    """
    if not 2 <= n <= 5:
        raise ParameterError(f"n must be in 2..5, got {n}")
    L = [list(l) for l in L_basis]
    v = list(v)
    if len(L) != n or rank(L) != n:
        raise ParameterError(f"L must be {n}-dimensional")
    if not isotropy_check(L, form):
        raise ParameterError("L is not totally isotropic")
    if form(v, v) != 0:
        raise ParameterError("v is not isotropic")
    if in_span(L, v):
        raise ParameterError("v lies in L")

    for i in range(n):
        plane = [v] + [l for j, l in enumerate(L) if j != i]
        found = _nonisotropic_pair(plane, form)
        if found is not None:
            return Witness(basis=plane, method=f"coordinate hyperplane {i}", pair=found[:2], value=found[2])

    tried = 0
    for phi in _grid(n):
        kernel = sp.Matrix([phi]).nullspace()
        plane = [v] + [[sp.expand(sum(c * l[t] for c, l in zip(vec, L))) for t in range(form.size)] for vec in kernel]
        tried += 1
        found = _nonisotropic_pair(plane, form)
        if found is not None:
            return Witness(basis=plane, method=f"grid functional {tuple(phi)}", pair=found[:2], value=found[2])
    raise SearchExhaustedError(f"no non-isotropic {n}-plane through v among {tried} grid functionals")


def _grid(n: int):
    for phi in product(WITNESS_GRID, repeat=n):
        if any(phi):
            yield list(phi)


@dataclass
class MapReport:
    map_name: str
    ambient: str
    degree: int
    membership_checks: Dict[str, bool] = field(default_factory=dict)


def _map_registry() -> Dict[str, Callable[[int], Tuple[ParamSubspace, str, Dict[str, bool]]]]:
    def line(n):
        s = grassmannian_line(n, n + 2)
        return s, f"G({n},{n + 2})", {"pluecker_relations": pluecker_relations_hold(pluecker_coords(s), s.k, s.N, limit=50)}

    def conic(_n):
        s = veronese_conic()
        holds, _ = quadric_membership(list(s.rows.row(0)))
        return s, "P^3", {"on_quadric": holds}

    def segre(n):
        s = segre_line(n)
        holds, _ = quadric_membership(list(s.rows.row(0)))
        return s, f"Q_{n} in P^{n + 1}", {"on_quadric": holds}

    def ci_line(n):
        s = ci_degree_one_line(n)
        return s, f"G({n},{2 * n})", {"isotropic": isotropy_check(s.rows.tolist(), symplectic_form(n))}

    def pencil(kind):
        def build(n):
            s = isotropic_pencil(kind, n)
            form = symplectic_form(n) if kind == "CI" else split_symmetric_form(n)
            return s, f"G({n},{2 * n})", {"isotropic": isotropy_check(s.rows.tolist(), form)}
        return build

    return {
        "grassmannian_line": line,
        "veronese_conic": conic,
        "segre_line": segre,
        "ci_line": ci_line,
        "ci_pencil": pencil("CI"),
        "diii_pencil": pencil("DIII"),
    }


MAP_NAMES = sorted(_map_registry())


def describe_map(name: str, n: int = 3) -> MapReport:
    """Build a named map and report its degree and membership checks."""
    registry = _map_registry()
    if name not in registry:
        raise ParameterError(f"unknown map {name!r}; choose from {', '.join(MAP_NAMES)}")
    s, ambient, checks = registry[name](n)
    return MapReport(map_name=name, ambient=ambient, degree=curve_degree(s), membership_checks=checks)
