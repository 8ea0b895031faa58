"""
Quasi-determinants and quasi-Pluecker coordinates

|A|_ij = a_ij - sum_{k != j, l != i} a_ik (|A^{ij}|_lk)^-1 a_lj

Two evaluation strategies: the recursive definition, and one inversion of the
minor A^{ij}. Values are memoized per session by (row set, column set, i, j).
"""

from typing import Any, Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

from ncyb.matrix.inverse import matrix_inverse
from ncyb.matrix.labeled import LabeledMat, labeled_submatrix
from ncyb.utils.exceptions import LabelError, NotInvertible, Singular, SingularQuasiDet
from ncyb.utils.logging import setup_logger

logger = setup_logger(__name__)

STRATEGIES = ("auto", "recursive", "via_inverse")

MemoKey = Tuple[FrozenSet[Any], FrozenSet[Any], Any, Any]


class QuasiDetSession:
    """Quasi-determinants of the minors of one matrix"""

    def __init__(self, A: LabeledMat, strategy: str = "auto"):
        if strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {strategy!r}")
        if strategy == "auto":
            strategy = "via_inverse" if A.ops.supports_matrix_inverse else "recursive"
        self.A = A
        self.ops = A.ops
        self.strategy = strategy
        self._memo: Dict[MemoKey, Any] = {}
        self._inv_memo: Dict[MemoKey, Any] = {}

    def _order(self, labels: Iterable[Any], reference: Sequence[Any]) -> Tuple[Any, ...]:
        wanted = set(labels)
        missing = wanted - set(reference)
        if missing:
            raise LabelError(f"labels {sorted(map(str, missing))} not present")
        return tuple(x for x in reference if x in wanted)

    def quasi_det(
        self,
        rows: Iterable[Any],
        cols: Iterable[Any],
        i: Any,
        j: Any,
    ) -> Any:
        """|A^{rows}_{cols}|_{ij}"""
        rows = self._order(rows, self.A.rows)
        cols = self._order(cols, self.A.cols)
        if len(rows) != len(cols):
            raise LabelError(f"quasi-determinant of a non-square minor {len(rows)}x{len(cols)}")
        if i not in rows or j not in cols:
            raise LabelError(f"frame ({i!r}, {j!r}) outside the minor")
        key = (frozenset(rows), frozenset(cols), i, j)
        if key in self._memo:
            return self._memo[key]
        if len(rows) == 1:
            value = self.A.entry(i, j)
        elif self.strategy == "recursive":
            value = self._recursive(rows, cols, i, j)
        else:
            value = self._via_inverse(rows, cols, i, j)
        self._memo[key] = value
        return value

    def inverse_quasi_det(self, rows: Iterable[Any], cols: Iterable[Any], i: Any, j: Any) -> Any:
        """|A^{rows}_{cols}|_{ij}^-1"""
        rows = self._order(rows, self.A.rows)
        cols = self._order(cols, self.A.cols)
        key = (frozenset(rows), frozenset(cols), i, j)
        if key in self._inv_memo:
            return self._inv_memo[key]
        value = self.quasi_det(rows, cols, i, j)
        try:
            inv = self.ops.try_invert(value)
        except NotInvertible as e:
            raise SingularQuasiDet(
                f"quasi-determinant |A^{list(rows)}_{list(cols)}|_({i},{j}) is not invertible",
                rows=rows,
                cols=cols,
                i=i,
                j=j,
            ) from e
        self._inv_memo[key] = inv
        return inv

    def _recursive(self, rows: Tuple[Any, ...], cols: Tuple[Any, ...], i: Any, j: Any) -> Any:
        ops = self.ops
        sub_rows = tuple(r for r in rows if r != i)
        sub_cols = tuple(c for c in cols if c != j)
        total = self.A.entry(i, j)
        for k in sub_cols:
            a_ik = self.A.entry(i, k)
            if ops.is_zero(a_ik):
                continue
            for l in sub_rows:
                a_lj = self.A.entry(l, j)
                if ops.is_zero(a_lj):
                    continue
                inv = self.inverse_quasi_det(sub_rows, sub_cols, l, k)
                total = ops.sub(total, ops.mul(ops.mul(a_ik, inv), a_lj))
        return total

    def _via_inverse(self, rows: Tuple[Any, ...], cols: Tuple[Any, ...], i: Any, j: Any) -> Any:
        ops = self.ops
        sub_rows = tuple(r for r in rows if r != i)
        sub_cols = tuple(c for c in cols if c != j)
        minor = labeled_submatrix(self.A, sub_rows, sub_cols)
        try:
            B = matrix_inverse(minor)
        except (Singular, NotInvertible) as e:
            raise SingularQuasiDet(
                f"minor A^{list(sub_rows)}_{list(sub_cols)} is not invertible",
                rows=sub_rows,
                cols=sub_cols,
                i=i,
                j=j,
            ) from e
        total = self.A.entry(i, j)
        for k in sub_cols:
            a_ik = self.A.entry(i, k)
            if ops.is_zero(a_ik):
                continue
            for l in sub_rows:
                b_kl = B.entry(k, l)
                a_lj = self.A.entry(l, j)
                if ops.is_zero(b_kl) or ops.is_zero(a_lj):
                    continue
                total = ops.sub(total, ops.mul(ops.mul(a_ik, b_kl), a_lj))
        return total

    def full(self, i: Any, j: Any) -> Any:
        return self.quasi_det(self.A.rows, self.A.cols, i, j)


def quasi_det(A: LabeledMat, i: Any, j: Any, strategy: str = "auto") -> Any:
    """(i, j)-th quasi-determinant of the square matrix A."""
    if i not in A.rows or j not in A.cols:
        raise LabelError(f"frame ({i!r}, {j!r}) not among the labels of A")
    return QuasiDetSession(A, strategy).full(i, j)


def inverse_via_quasidet(A: LabeledMat, strategy: str = "auto") -> LabeledMat:
    """B with B[j, i] = |A|_ij^-1; rows of B carry A's column labels."""
    session = QuasiDetSession(A, strategy)
    grid = [[session.inverse_quasi_det(A.rows, A.cols, i, j) for i in A.rows] for j in A.cols]
    return LabeledMat(A.cols, A.rows, grid, A.ops)


def left_qplucker(
    A: LabeledMat,
    i: Any,
    j: Any,
    J: Sequence[Any],
    s: Any,
    session: Optional[QuasiDetSession] = None,
) -> Any:
    """q^J_ij(A) = |A_{i,J}|_{si}^-1 |A_{j,J}|_{sj}  (A is m x N, |J| = m - 1)"""
    if i in J or j in J:
        raise LabelError(f"column labels {i!r}, {j!r} must lie outside J")
    if len(J) != len(A.rows) - 1:
        raise LabelError(f"J must have {len(A.rows) - 1} labels")
    if s not in A.rows:
        raise LabelError(f"row label {s!r} not present")
    if i == j:
        return A.ops.one()
    session = session or QuasiDetSession(A)
    left = session.inverse_quasi_det(A.rows, [i, *J], s, i)
    right = session.quasi_det(A.rows, [j, *J], s, j)
    return A.ops.mul(left, right)


def right_qplucker(
    A: LabeledMat,
    i: Any,
    j: Any,
    I: Sequence[Any],
    t: Any,
    session: Optional[QuasiDetSession] = None,
) -> Any:
    """r^I_ij(A) = |A^{i,I}|_{it} |A^{j,I}|_{jt}^-1  (A is N x m, |I| = m - 1)"""
    if i in I or j in I:
        raise LabelError(f"row labels {i!r}, {j!r} must lie outside I")
    if len(I) != len(A.cols) - 1:
        raise LabelError(f"I must have {len(A.cols) - 1} labels")
    if t not in A.cols:
        raise LabelError(f"column label {t!r} not present")
    if i == j:
        return A.ops.one()
    session = session or QuasiDetSession(A)
    left = session.quasi_det([i, *I], A.cols, i, t)
    right = session.inverse_quasi_det([j, *I], A.cols, j, t)
    return A.ops.mul(left, right)
