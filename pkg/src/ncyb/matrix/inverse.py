"""
Exact inverses and determinants

Field-entried matrices go through sympy's DomainMatrix; dual-number matrices
invert their classical part; operator-entried matrices are flattened first.
"""

from itertools import combinations
from typing import Any, List, Sequence

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from ncyb.matrix.labeled import LabeledMat, flatten, labeled_submatrix, mat_mul, unflatten
from ncyb.matrix.ops import DualOps, FieldOps, MatrixOps
from ncyb.ring.dual import DualNum
from ncyb.utils.exceptions import NotInvertible, ShapeError, Singular


def _domain_of(ops: FieldOps) -> Any:
    return QQ if ops.is_rational else ops.domain.to_domain()


def to_domain_matrix(A: LabeledMat) -> DomainMatrix:
    if not isinstance(A.ops, FieldOps):
        raise ShapeError("DomainMatrix conversion needs field entries")
    dom = _domain_of(A.ops)
    m, n = A.shape
    return DomainMatrix([[dom.convert(e) for e in row] for row in A.entries], (m, n), dom)


def _square(A: LabeledMat) -> int:
    m, n = A.shape
    if m != n:
        raise ShapeError(f"square matrix required, got {A.shape}")
    return m


def field_inverse(A: LabeledMat) -> LabeledMat:
    """Inverse over a commutative field; labels swap roles (rows <- cols)."""
    m = _square(A)
    if m == 0:
        return A
    try:
        inv = to_domain_matrix(A).inv()
    except (DMNonInvertibleMatrixError, ZeroDivisionError) as e:
        raise Singular(f"matrix {A.rows}x{A.cols} is singular") from e
    return LabeledMat(A.cols, A.rows, inv.to_list(), A.ops)


def dual_inverse(A: LabeledMat) -> LabeledMat:
    """(A0 + hA1)^-1 = A0^-1 - h A0^-1 A1 A0^-1."""
    if not isinstance(A.ops, DualOps):
        raise ShapeError("dual_inverse needs dual-number entries")
    base = A.ops.base
    A0 = A.map_entries(lambda d: d.classical, base)
    A1 = A.map_entries(lambda d: d.h_part, base)
    B0 = matrix_inverse(A0)
    B1 = -mat_mul(mat_mul(B0, A1), B0)
    grid = [
        [DualNum(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(B0.entries, B1.entries)
    ]
    return LabeledMat(B0.rows, B0.cols, grid, A.ops)


def block_inverse(A: LabeledMat) -> LabeledMat:
    """Inverse of an operator-entried matrix via its flattened scalar form."""
    if not isinstance(A.ops, MatrixOps):
        raise ShapeError("block_inverse needs operator entries")
    _square(A)
    flat_inv = matrix_inverse(flatten(A))
    return unflatten(flat_inv, A.cols, A.rows, A.ops.dim)


def matrix_inverse(A: LabeledMat) -> LabeledMat:
    """Two-sided inverse for every entry ring that supports one."""
    ops = A.ops
    if isinstance(ops, FieldOps):
        return field_inverse(A)
    if isinstance(ops, DualOps):
        return dual_inverse(A)
    if isinstance(ops, MatrixOps):
        return block_inverse(A)
    raise NotInvertible(f"no matrix inverse over {ops!r}")


def det(A: LabeledMat) -> Any:
    m = _square(A)
    if m == 0:
        return A.ops.one()
    return to_domain_matrix(A).det()


def cofactor_det(A: LabeledMat) -> Any:
    """Laplace expansion along the first row (commutative oracle)."""
    m = _square(A)
    ops = A.ops
    if m == 0:
        return ops.one()
    if m == 1:
        return A.entries[0][0]
    total = ops.zero()
    rest_rows = list(range(1, m))
    for j in range(m):
        a = A.entries[0][j]
        if ops.is_zero(a):
            continue
        minor = LabeledMat(
            range(m - 1),
            range(m - 1),
            [[A.entries[r][c] for c in range(m) if c != j] for r in rest_rows],
            ops,
        )
        term = ops.mul(a, cofactor_det(minor))
        total = ops.add(total, term) if j % 2 == 0 else ops.sub(total, term)
    return total


def minor_det(A: LabeledMat, rows: Sequence[Any], cols: Sequence[Any]) -> Any:
    return det(labeled_submatrix(A, rows, cols))


def cauchy_binet_check(A: LabeledMat, B: LabeledMat, r: int) -> List[dict]:
    """det (AB)_{I,J} = sum_K det A_{I,K} det B_{K,J} for all r-subsets I, J.

    Returns the failing (I, J) instances.
    """
    AB = mat_mul(A, B)
    ops = A.ops
    failures = []
    inner = list(combinations(A.cols, r))
    for I in combinations(A.rows, r):
        for J in combinations(B.cols, r):
            lhs = det(labeled_submatrix(AB, I, J))
            rhs = ops.zero()
            for K in inner:
                K_rows = [B.rows[A.cols.index(k)] for k in K]
                rhs = ops.add(
                    rhs,
                    ops.mul(minor_det(A, I, K), minor_det(B, K_rows, J)),
                )
            if not ops.equals(lhs, rhs):
                failures.append({"I": [str(i) for i in I], "J": [str(j) for j in J]})
    return failures
