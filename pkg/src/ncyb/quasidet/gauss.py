"""
Gauss decompositions over noncommutative rings

senior: A = E H F,   H_k = |A^{k..N}_{k..N}|_kk
junior: A = F H E,   H_k = |A^{1..k}_{1..k}|_kk

E is upper unitriangular and F lower unitriangular in both variants; the
off-diagonal entries are quasi-Pluecker coordinates of corner submatrices.
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from ncyb.matrix.labeled import LabeledMat, mat_product
from ncyb.quasidet.core import QuasiDetSession
from ncyb.utils.exceptions import LabelError, SingularQuasiDet

VARIANTS = ("senior", "junior")


@dataclass(frozen=True)
class GaussFactors:
    """Unitriangular E, F and diagonal H of one decomposition"""

    E: LabeledMat
    H: LabeledMat
    F: LabeledMat
    variant: str

    def reconstruct(self) -> LabeledMat:
        if self.variant == "senior":
            return mat_product([self.E, self.H, self.F])
        return mat_product([self.F, self.H, self.E])

    def diagonal(self) -> Tuple[Any, ...]:
        return tuple(self.H.entries[k][k] for k in range(self.H.shape[0]))


def _square_labels(A: LabeledMat) -> None:
    if A.shape[0] != A.shape[1]:
        raise LabelError(f"Gauss decomposition needs a square matrix, got {A.shape}")


def _pivot(session: QuasiDetSession, rows, cols, i, j, k: int) -> Any:
    try:
        return session.quasi_det(rows, cols, i, j)
    except SingularQuasiDet as e:
        raise SingularQuasiDet(
            f"Gauss pivot k={k} undefined: {e}", rows=e.rows, cols=e.cols, i=e.i, j=e.j
        ) from e


def _pivot_inverse(session: QuasiDetSession, rows, cols, i, j, k: int) -> Any:
    try:
        return session.inverse_quasi_det(rows, cols, i, j)
    except SingularQuasiDet as e:
        raise SingularQuasiDet(
            f"Gauss pivot k={k} not invertible: {e}", rows=e.rows, cols=e.cols, i=e.i, j=e.j
        ) from e


def gauss_decompose(
    A: LabeledMat, variant: str = "senior", session: Optional[QuasiDetSession] = None
) -> GaussFactors:
    if variant not in VARIANTS:
        raise ValueError(f"unknown Gauss variant {variant!r}")
    _square_labels(A)
    session = session or QuasiDetSession(A)
    ops = A.ops
    R, C = A.rows, A.cols
    N = len(R)
    E: Dict[Tuple[int, int], Any] = {}
    F: Dict[Tuple[int, int], Any] = {}
    H = []
    if variant == "senior":
        for k in range(N):
            H.append(_pivot(session, R[k:], C[k:], R[k], C[k], k + 1))
        for j in range(N):
            inv_h = _pivot_inverse(session, R[j:], C[j:], R[j], C[j], j + 1)
            tail_rows, tail_cols = R[j + 1 :], C[j + 1 :]
            for i in range(j):
                # E_ij = |A^{i, j+1..N}_{j..N}|_{i, c_j} |A^{j..N}_{j..N}|_{jj}^-1
                E[(i, j)] = ops.mul(
                    session.quasi_det((R[i], *tail_rows), C[j:], R[i], C[j]), inv_h
                )
                # F_ji = |A^{j..N}_{j..N}|_{jj}^-1 |A^{j..N}_{i, j+1..N}|_{r_j, i}
                F[(j, i)] = ops.mul(
                    inv_h, session.quasi_det(R[j:], (C[i], *tail_cols), R[j], C[i])
                )
    else:
        for k in range(N):
            H.append(_pivot(session, R[: k + 1], C[: k + 1], R[k], C[k], k + 1))
        for i in range(N):
            inv_h = _pivot_inverse(session, R[: i + 1], C[: i + 1], R[i], C[i], i + 1)
            head_rows, head_cols = R[:i], C[:i]
            for j in range(i + 1, N):
                # E_ij = |A^{1..i}_{1..i}|_{ii}^-1 |A^{1..i}_{1..i-1, j}|_{r_i, j}
                E[(i, j)] = ops.mul(
                    inv_h, session.quasi_det(R[: i + 1], (*head_cols, C[j]), R[i], C[j])
                )
                # F_ji = |A^{1..i-1, j}_{1..i}|_{j, c_i} |A^{1..i}_{1..i}|_{ii}^-1
                F[(j, i)] = ops.mul(
                    session.quasi_det((*head_rows, R[j]), C[: i + 1], R[j], C[i]), inv_h
                )
    one, zero = ops.one(), ops.zero()

    def unitriangular(values: Dict[Tuple[int, int], Any], labels) -> LabeledMat:
        grid = [
            [one if r == c else values.get((r, c), zero) for c in range(N)] for r in range(N)
        ]
        return LabeledMat(labels, labels, grid, ops)

    H_mat = LabeledMat(R, C, [[H[r] if r == c else zero for c in range(N)] for r in range(N)], ops)
    if variant == "senior":
        return GaussFactors(unitriangular(E, R), H_mat, unitriangular(F, C), variant)
    return GaussFactors(unitriangular(E, C), H_mat, unitriangular(F, R), variant)


def inverse_factor_entry(
    session: QuasiDetSession, variant: str, factor: str, i: int, j: int
) -> Any:
    """(E^-1)_ij when factor is "E", (F^-1)_ji when it is "F"; positions i < j from 0."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown Gauss variant {variant!r}")
    if factor not in ("E", "F"):
        raise ValueError(f"unknown Gauss factor {factor!r}")
    A = session.A
    ops = A.ops
    R, C = A.rows, A.cols
    if variant == "senior":
        rows, cols = R[i:], C[i:]
        pivot = session.quasi_det(rows, cols, R[i], C[i])
        if factor == "E":
            return ops.mul(pivot, session.inverse_quasi_det(rows, cols, R[j], C[i]))
        return ops.mul(session.inverse_quasi_det(rows, cols, R[i], C[j]), pivot)
    rows, cols = R[: j + 1], C[: j + 1]
    pivot = session.quasi_det(rows, cols, R[j], C[j])
    if factor == "E":
        return ops.mul(session.inverse_quasi_det(rows, cols, R[j], C[i]), pivot)
    return ops.mul(pivot, session.inverse_quasi_det(rows, cols, R[i], C[j]))


def gauss_inverse_factors(
    A: LabeledMat, variant: str = "senior", session: Optional[QuasiDetSession] = None
) -> Tuple[LabeledMat, LabeledMat]:
    """(E^-1, F^-1) from swapped quasi-determinants, without inverting E or F.

    senior: (E^-1)_ij = |A^{i..N}|_ii |A^{i..N}|_ji^-1,  (F^-1)_ji = |A^{i..N}|_ij^-1 |A^{i..N}|_ii
    junior: (E^-1)_ij = |A^{1..j}|_ji^-1 |A^{1..j}|_jj,  (F^-1)_ji = |A^{1..j}|_jj |A^{1..j}|_ij^-1
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown Gauss variant {variant!r}")
    _square_labels(A)
    session = session or QuasiDetSession(A)
    ops = A.ops
    N = len(A.rows)
    E: Dict[Tuple[int, int], Any] = {}
    F: Dict[Tuple[int, int], Any] = {}
    for i in range(N):
        for j in range(i + 1, N):
            E[(i, j)] = inverse_factor_entry(session, variant, "E", i, j)
            F[(j, i)] = inverse_factor_entry(session, variant, "F", i, j)
    one, zero = ops.one(), ops.zero()

    def unitriangular(values: Dict[Tuple[int, int], Any]) -> LabeledMat:
        grid = [
            [one if r == c else values.get((r, c), zero) for c in range(N)] for r in range(N)
        ]
        return LabeledMat(range(1, N + 1), range(1, N + 1), grid, ops)

    return unitriangular(E), unitriangular(F)
