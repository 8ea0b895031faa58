"""
The quantum Yang-Baxter map in quasi-determinant and quasi-Pluecker form

Values may be operators or commuting scalars; every product is taken in the
entry ring, so a scalar state gives the commutative limit of the same formulas.

Forward map (senior pivots H_k = |J^{k..n}_{k..n}|_kk, uu_k = u_k^(1) u_k^(2)):

    L~+(1)_ij = (->prod_{k<i} H_k^-1 uu_k) H_i^-1 |M^{i..n}_{j-bar, i+1..n}|_{i, j-bar}
    L~-(1)_ji = (->prod_{k<j} H_k^-1 uu_k) H_j^-1 |J^{j..n}_{i, j+1..n}|_{j, i}
    L~+(2)_ij = |J^{i, j+1..n}_{j..n}|_{i, j} <-prod_{k<j} uu_k^-1 H_k
    L~-(2)_ji = |M^{j-bar, i+1..n}_{i..n}|_{j-bar, i} <-prod_{k<i} uu_k^-1 H_k

Inverse map (junior pivots H~_k = |J~^{1..k}_{1..k}|_kk, uu~_k = u~_k^(2) u~_k^(1)):

    L+(1)_ij = |M~^{1..j-1, i-bar}_{1..j}|_{i-bar, j} H~_j^-1 <-prod_{k<j} uu~_k H~_k^-1
    L-(1)_ji = |J~^{1..i-1, j}_{1..i}|_{j, i} H~_i^-1 <-prod_{k<i} uu~_k H~_k^-1
    L+(2)_ij = (->prod_{k<i} H~_k uu~_k^-1) |J~^{1..i}_{1..i-1, j}|_{i, j}
    L-(2)_ji = (->prod_{k<j} H~_k uu~_k^-1) |M~^{1..j}_{1..j-1, i-bar}|_{j, i-bar}

->prod_{k=1}^m a_k = a_1 ... a_m and <-prod_{k=1}^m a_k = a_m ... a_1.
"""

from dataclasses import replace
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from ncyb.matrix.labeled import LabeledMat, labeled_submatrix
from ncyb.matrix.ops import RingOps
from ncyb.quasidet.core import QuasiDetSession, left_qplucker, right_qplucker
from ncyb.quasidet.gauss import gauss_decompose
from ncyb.utils.exceptions import NotInvertible, SingularQuasiDet
from ncyb.utils.logging import setup_logger
from ncyb.ybmap.blocks import Bar, BlockM, J_matrix, J_tilde, block_M, block_M_tilde
from ncyb.ybmap.state import Component, YBState, swap

logger = setup_logger(__name__)

DIRECTIONS = ("forward", "inverse")

Entries = Dict[Tuple[int, int], LabeledMat]
Pivot = Callable[[int], LabeledMat]


def _span(a: int, b: int) -> List[int]:
    return list(range(a, b + 1))


def _prod(ops: RingOps, factors: Sequence[Any]) -> Any:
    """Left-to-right product in the entry ring; the empty product is one."""
    out = ops.one()
    for f in factors:
        out = ops.mul(out, f)
    return out


def _operator_inverse(ops: RingOps, x: Any, what: str) -> Any:
    try:
        return ops.try_invert(x)
    except NotInvertible as e:
        raise SingularQuasiDet(f"{what} is not invertible") from e


def _state(template: YBState, first: Tuple[Entries, Entries], second: Tuple[Entries, Entries]):
    ops = template.ops
    zero = ops.zero()
    idx = _span(1, template.n)

    def matrix(values: Entries) -> LabeledMat:
        return LabeledMat(idx, idx, [[values.get((i, j), zero) for j in idx] for i in idx], ops)

    comps = (
        Component(matrix(first[0]), matrix(first[1])),
        Component(matrix(second[0]), matrix(second[1])),
    )
    return replace(template, components=comps)


class _Products:
    """Running products over the pivots of one map evaluation"""

    def __init__(self, ops: RingOps, uu: Pivot):
        self.ops = ops
        self.uu = uu
        self._uu_inv: Dict[int, LabeledMat] = {}

    def uu_inv(self, k: int) -> LabeledMat:
        if k not in self._uu_inv:
            self._uu_inv[k] = _operator_inverse(self.ops, self.uu(k), f"u_{k}^(1) u_{k}^(2)")
        return self._uu_inv[k]

    def ordered(self, factor: Pivot, m: int, reverse: bool = False) -> LabeledMat:
        """->prod_{k=1}^m factor(k), or <-prod when reverse."""
        ks = range(m, 0, -1) if reverse else range(1, m + 1)
        return _prod(self.ops, [factor(k) for k in ks])


def qd_forward_map(state: YBState) -> YBState:
    """(L(1), L(2)) -> (L~(1), L~(2)) from senior quasi-determinants of M."""
    n = state.n
    M = block_M(state)
    session = QuasiDetSession(M.matrix)
    ops = state.ops

    def tail(k: int) -> List[int]:
        return _span(k, n)

    def H(k: int) -> LabeledMat:
        return session.quasi_det(tail(k), tail(k), k, k)

    def H_inv(k: int) -> LabeledMat:
        return session.inverse_quasi_det(tail(k), tail(k), k, k)

    def uu(k: int) -> LabeledMat:
        return _prod(ops, [state.u(1, k), state.u(2, k)])

    p = _Products(state.ops, uu)

    def head(m: int) -> LabeledMat:
        return p.ordered(lambda k: _prod(ops, [H_inv(k), uu(k)]), m)

    def back(m: int) -> LabeledMat:
        return p.ordered(lambda k: _prod(ops, [p.uu_inv(k), H(k)]), m, reverse=True)

    Lp1: Entries = {}
    Lm1: Entries = {}
    Lp2: Entries = {}
    Lm2: Entries = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            framed = session.quasi_det(tail(i), [Bar(j), *tail(i + 1)], i, Bar(j))
            Lp1[(i, j)] = _prod(ops, [head(i - 1), H_inv(i), framed])
            minor = session.quasi_det(tail(j), [i, *tail(j + 1)], j, i)
            Lm1[(j, i)] = _prod(ops, [head(j - 1), H_inv(j), minor])
            minor = session.quasi_det([i, *tail(j + 1)], tail(j), i, j)
            Lp2[(i, j)] = _prod(ops, [minor, back(j - 1)])
            framed = session.quasi_det([Bar(j), *tail(i + 1)], tail(i), Bar(j), i)
            Lm2[(j, i)] = _prod(ops, [framed, back(i - 1)])
    logger.debug("forward map evaluated", n=n)
    return _state(state, (Lp1, Lm1), (Lp2, Lm2))


def qd_inverse_map(state_tilde: YBState) -> YBState:
    """(L~(1), L~(2)) -> (L(1), L(2)) from junior quasi-determinants of M~."""
    n = state_tilde.n
    M = block_M_tilde(state_tilde)
    session = QuasiDetSession(M.matrix)
    ops = state_tilde.ops

    def upto(k: int) -> List[int]:
        return _span(1, k)

    def H(k: int) -> LabeledMat:
        return session.quasi_det(upto(k), upto(k), k, k)

    def H_inv(k: int) -> LabeledMat:
        return session.inverse_quasi_det(upto(k), upto(k), k, k)

    def uu(k: int) -> LabeledMat:
        return _prod(ops, [state_tilde.u(2, k), state_tilde.u(1, k)])

    p = _Products(state_tilde.ops, uu)

    def back(m: int) -> LabeledMat:
        return p.ordered(lambda k: _prod(ops, [uu(k), H_inv(k)]), m, reverse=True)

    def head(m: int) -> LabeledMat:
        return p.ordered(lambda k: _prod(ops, [H(k), p.uu_inv(k)]), m)

    Lp1: Entries = {}
    Lm1: Entries = {}
    Lp2: Entries = {}
    Lm2: Entries = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            framed = session.quasi_det([*upto(j - 1), Bar(i)], upto(j), Bar(i), j)
            Lp1[(i, j)] = _prod(ops, [framed, H_inv(j), back(j - 1)])
            minor = session.quasi_det([*upto(i - 1), j], upto(i), j, i)
            Lm1[(j, i)] = _prod(ops, [minor, H_inv(i), back(i - 1)])
            minor = session.quasi_det(upto(i), [*upto(i - 1), j], i, j)
            Lp2[(i, j)] = _prod(ops, [head(i - 1), minor])
            framed = session.quasi_det(upto(j), [*upto(j - 1), Bar(i)], j, Bar(i))
            Lm2[(j, i)] = _prod(ops, [head(j - 1), framed])
    logger.debug("inverse map evaluated", n=n)
    return _state(state_tilde, (Lp1, Lm1), (Lp2, Lm2))


def star_map(state: YBState) -> YBState:
    """R* map: the inverse map with superscripts (1), (2) exchanged on both sides."""
    return swap(qd_inverse_map(swap(state)))


def star_map_inverse(state_tilde: YBState) -> YBState:
    return swap(qd_forward_map(swap(state_tilde)))


# quasi-Pluecker forms


def _rows(M: BlockM, rows: Sequence[object]) -> LabeledMat:
    return labeled_submatrix(M.matrix, rows, M.matrix.cols)


def _cols(M: BlockM, cols: Sequence[object]) -> LabeledMat:
    return labeled_submatrix(M.matrix, M.matrix.rows, cols)


def _qp_forward(state: YBState) -> YBState:
    n = state.n
    M = block_M(state)
    session = QuasiDetSession(M.matrix)
    ops = state.ops

    def tail(k: int) -> List[int]:
        return _span(k, n)

    def q(s: int, i: object, j: object) -> LabeledMat:
        """q^{s+1..n}_{i j}(M^{s..n}_{all})"""
        return left_qplucker(_rows(M, tail(s)), i, j, tail(s + 1), s, session)

    def r(t: int, i: object, j: object) -> LabeledMat:
        """r^{t+1..n}_{i j}(M^{all}_{t..n})"""
        return right_qplucker(_cols(M, tail(t)), i, j, tail(t + 1), t, session)

    def head(m: int) -> LabeledMat:
        return _prod(ops, [q(k, k, Bar(k)) for k in range(1, m + 1)])

    def back(m: int) -> LabeledMat:
        return _prod(ops, [r(k, k, Bar(k)) for k in range(m, 0, -1)])

    Lp1: Entries = {}
    Lm1: Entries = {}
    Lp2: Entries = {}
    Lm2: Entries = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            Lp1[(i, j)] = _prod(ops, [head(i - 1), q(i, i, Bar(j))])
            Lm1[(j, i)] = _prod(ops, [head(j - 1), q(j, j, i)])
            Lp2[(i, j)] = _prod(ops, [r(j, i, Bar(j)), back(j - 1)])
            Lm2[(j, i)] = _prod(ops, [r(i, Bar(j), Bar(i)), back(i - 1)])
    return _state(state, (Lp1, Lm1), (Lp2, Lm2))


def _qp_inverse(state_tilde: YBState) -> YBState:
    n = state_tilde.n
    M = block_M_tilde(state_tilde)
    session = QuasiDetSession(M.matrix)
    ops = state_tilde.ops

    def upto(k: int) -> List[int]:
        return _span(1, k)

    def q(s: int, i: object, j: object) -> LabeledMat:
        """q^{1..s-1}_{i j}(M~^{1..s}_{all})"""
        return left_qplucker(_rows(M, upto(s)), i, j, upto(s - 1), s, session)

    def r(t: int, i: object, j: object) -> LabeledMat:
        """r^{1..t-1}_{i j}(M~^{all}_{1..t})"""
        return right_qplucker(_cols(M, upto(t)), i, j, upto(t - 1), t, session)

    def back(m: int) -> LabeledMat:
        return _prod(ops, [r(k, Bar(k), k) for k in range(m, 0, -1)])

    def head(m: int) -> LabeledMat:
        return _prod(ops, [q(k, Bar(k), k) for k in range(1, m + 1)])

    Lp1: Entries = {}
    Lm1: Entries = {}
    Lp2: Entries = {}
    Lm2: Entries = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            Lp1[(i, j)] = _prod(ops, [r(j, Bar(i), j), back(j - 1)])
            Lm1[(j, i)] = _prod(ops, [r(i, j, i), back(i - 1)])
            Lp2[(i, j)] = _prod(ops, [head(i - 1), q(i, Bar(i), j)])
            Lm2[(j, i)] = _prod(ops, [head(j - 1), q(j, Bar(j), Bar(i))])
    return _state(state_tilde, (Lp1, Lm1), (Lp2, Lm2))


def qplucker_maps(state: YBState, direction: str = "forward") -> YBState:
    """The same maps written as products of quasi-Pluecker coordinates of M or M~."""
    if direction not in DIRECTIONS:
        raise ValueError(f"unknown direction {direction!r}")
    return _qp_forward(state) if direction == "forward" else _qp_inverse(state)


def gauss_intermediates(state: YBState, state_tilde: Optional[YBState] = None) -> Dict[str, Any]:
    """Pivots H_k, products u_k^(1) u_k^(2), the framed reductions of M, and the
    Gauss factors of J (senior) and J~ (junior).

    J~ is built from state_tilde, the forward image of state when not given.
    """
    n = state.n
    session = QuasiDetSession(block_M(state).matrix)
    ops = state.ops
    out: Dict[str, Any] = {"H": {}, "uu": {}, "framed_P": {}, "framed_Q": {}}
    for k in range(1, n + 1):
        rows = _span(k, n)
        out["H"][k] = session.quasi_det(rows, rows, k, k)
        out["uu"][k] = _prod(ops, [state.u(1, k), state.u(2, k)])
        out["framed_P"][k] = session.quasi_det(rows, [Bar(k), *_span(k + 1, n)], k, Bar(k))
        out["framed_Q"][k] = session.quasi_det([Bar(k), *_span(k + 1, n)], rows, Bar(k), k)
    tilde = state_tilde if state_tilde is not None else qd_forward_map(state)
    out["senior"] = gauss_decompose(J_matrix(state), "senior")
    out["junior"] = gauss_decompose(J_tilde(tilde), "junior")
    return out
