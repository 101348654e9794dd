"""Exact linear algebra over the Gaussian rationals.

Vectors and matrices arrive as nested lists (or sympy matrices) of entries
a + b*I with a, b rational. Everything is converted to a sympy DomainMatrix
over QQ_I, so no step rounds.
"""

from typing import List, Optional, Sequence

import sympy as sp
from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from utils.errors import ParameterError

Vector = Sequence[sp.Expr]


def is_gaussian_rational(value) -> bool:
    """True when value is a + b*I with a, b rational."""
    value = sp.expand(sp.sympify(value))
    real, imag = value.as_real_imag()
    return bool(real.is_Rational) and bool(imag.is_Rational)


def to_domain_matrix(rows: Sequence[Vector]) -> DomainMatrix:
    """
    Convert rows of Gaussian rationals into a DomainMatrix over QQ_I.

    Args:
        rows: Non-empty sequence of equal-length rows

    Returns:
        DomainMatrix over QQ_I
    """
    rows = [list(row) for row in rows]
    if not rows:
        raise ParameterError("cannot build a matrix from zero rows")
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise ParameterError("rows have different lengths")
    elements = [[QQ_I.from_sympy(sp.expand(sp.sympify(x))) for x in row] for row in rows]
    return DomainMatrix(elements, (len(rows), width), QQ_I)


def rank(rows: Sequence[Vector]) -> int:
    """Exact rank of the matrix with the given rows (0 for no rows)."""
    if len(rows) == 0:
        return 0
    return to_domain_matrix(rows).rank()


def in_span(basis: Sequence[Vector], vector: Vector) -> bool:
    """Exact span membership by rank comparison."""
    if len(basis) == 0:
        return all(sp.expand(x) == 0 for x in vector)
    return rank(list(basis) + [vector]) == rank(basis)


def coordinates(basis: Sequence[Vector], vector: Vector) -> Optional[List[sp.Expr]]:
    """
    Solve sum(c_i * basis_i) = vector exactly.

    The basis must be linearly independent.

    Args:
        basis: Independent vectors
        vector: Target vector

    Returns:
        Coefficient list, or None when vector is not in the span
    """
    n = len(basis)
    if n == 0:
        return [] if all(sp.expand(x) == 0 for x in vector) else None
    length = len(vector)
    augmented = [[basis[j][i] for j in range(n)] + [vector[i]] for i in range(length)]
    reduced, pivots = to_domain_matrix(augmented).rref()
    if n in pivots:
        return None
    if len(pivots) != n:
        raise ParameterError("basis is linearly dependent")
    solved = reduced.to_Matrix()
    return [sp.expand(solved[row, n]) for row in range(n)]


def matrix_of_map(basis: Sequence[Vector], images: Sequence[Vector]) -> sp.Matrix:
    """
    Matrix (columns = coordinates) of a linear map given on a basis.

    Raises:
        ParameterError: If an image leaves the span of the basis
    """
    columns = []
    for index, image in enumerate(images):
        coords = coordinates(basis, image)
        if coords is None:
            raise ParameterError(f"image of basis vector {index} is not in the span")
        columns.append(coords)
    n = len(basis)
    return sp.Matrix(n, len(columns), lambda i, j: columns[j][i])


def kernel_line(rows: Sequence[Vector]) -> List[sp.Expr]:
    """
    Kernel of a k x (k+1) matrix via signed maximal minors.

    Entries may be polynomials; the result is polynomial (no division).
    When the rows have full rank k the result spans the kernel; it is the
    zero vector otherwise.
    """
    mat = sp.Matrix(rows)
    k, width = mat.shape
    if width != k + 1:
        raise ParameterError(f"kernel_line needs a k x (k+1) matrix, got {k} x {width}")
    result = []
    for j in range(width):
        keep = [c for c in range(width) if c != j]
        minor = mat.extract(list(range(k)), keep).det() if k else sp.Integer(1)
        result.append(sp.expand((-1) ** j * minor))
    return result
