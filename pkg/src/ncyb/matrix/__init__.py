"""Generic labeled matrices over commutative and noncommutative rings."""

from ncyb.matrix.inverse import (
    cauchy_binet_check,
    cofactor_det,
    det,
    field_inverse,
    matrix_inverse,
)
from ncyb.matrix.labeled import (
    LabeledMat,
    commutator,
    drop,
    embed_operator,
    kron,
    kron_all,
    labeled_submatrix,
    mat_mul,
    mat_product,
    partial_transpose,
    permutation_matrix,
)
from ncyb.matrix.ops import DualOps, FieldOps, MatrixOps, RationalOps, RingOps

__all__ = [
    "DualOps",
    "FieldOps",
    "LabeledMat",
    "MatrixOps",
    "RationalOps",
    "RingOps",
    "cauchy_binet_check",
    "cofactor_det",
    "commutator",
    "det",
    "drop",
    "embed_operator",
    "field_inverse",
    "kron",
    "kron_all",
    "labeled_submatrix",
    "mat_mul",
    "mat_product",
    "partial_transpose",
    "matrix_inverse",
    "permutation_matrix",
]
