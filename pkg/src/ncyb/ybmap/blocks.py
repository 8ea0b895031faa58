"""
2n x 2n block matrices with overlined labels

    M  = [[0, Q], [P, J]]        P = L+(1) L+(2), Q = L-(1) L-(2), J = L-(1) L+(2)
    M~ = [[0, P~], [Q~, J~]]     P~ = L~+(2) L~+(1), Q~ = L~-(2) L~-(1), J~ = L~+(2) L~-(1)

The first n rows and columns carry Bar(k) labels, the last n plain integers,
so that |M^{i..n}_{j-bar, i+1..n}|_{i, j-bar} names a column of P framed by J.
"""

from dataclasses import dataclass
from typing import List, Sequence

from ncyb.matrix.labeled import LabeledMat, labeled_submatrix, mat_mul
from ncyb.ybmap.state import YBState, swap

KINDS = ("M", "Mtilde", "Mstar", "Mstar_tilde")


@dataclass(frozen=True, order=True)
class Bar:
    """Overlined index k"""

    k: int

    def __str__(self) -> str:
        return f"{self.k}bar"


def bars(labels: Sequence[int]) -> List[Bar]:
    return [Bar(k) for k in labels]


@dataclass(frozen=True)
class BlockM:
    kind: str
    n: int
    matrix: LabeledMat

    @property
    def labels(self) -> List[object]:
        return [*bars(range(1, self.n + 1)), *range(1, self.n + 1)]

    def block(self, top: bool, left: bool) -> LabeledMat:
        idx = range(1, self.n + 1)
        rows = bars(idx) if top else list(idx)
        cols = bars(idx) if left else list(idx)
        return labeled_submatrix(self.matrix, rows, cols).relabel(idx, idx)

    def sub(self, rows: Sequence[object], cols: Sequence[object]) -> LabeledMat:
        return labeled_submatrix(self.matrix, rows, cols)

    def block_transpose(self) -> "BlockM":
        """[[0, B], [C, D]] -> [[0, C], [B, D]]"""
        B = self.block(True, False)
        C = self.block(False, True)
        D = self.block(False, False)
        return assemble(f"t{self.kind}", B=C, C=B, D=D)

    def equals(self, other: "BlockM") -> bool:
        return self.matrix.equals(other.matrix)


def assemble(kind: str, B: LabeledMat, C: LabeledMat, D: LabeledMat) -> BlockM:
    """[[0, B], [C, D]] with B top-right, C bottom-left, D bottom-right."""
    n = B.shape[0]
    zero = B.ops.zero()
    grid = [[zero] * n + list(row) for row in B.entries]
    grid += [list(c) + list(d) for c, d in zip(C.entries, D.entries)]
    idx = range(1, n + 1)
    labels = [*bars(idx), *idx]
    return BlockM(kind, n, LabeledMat(labels, labels, grid, B.ops))


def J_matrix(state: YBState) -> LabeledMat:
    return mat_mul(state.L(1, -1), state.L(2, 1))


def J_tilde(state_tilde: YBState) -> LabeledMat:
    return mat_mul(state_tilde.L(2, 1), state_tilde.L(1, -1))


def block_M(state: YBState) -> BlockM:
    P = mat_mul(state.L(1, 1), state.L(2, 1))
    Q = mat_mul(state.L(1, -1), state.L(2, -1))
    return assemble("M", B=Q, C=P, D=J_matrix(state))


def block_M_tilde(state_tilde: YBState) -> BlockM:
    P = mat_mul(state_tilde.L(2, 1), state_tilde.L(1, 1))
    Q = mat_mul(state_tilde.L(2, -1), state_tilde.L(1, -1))
    return assemble("Mtilde", B=P, C=Q, D=J_tilde(state_tilde))


def block_M_star(state: YBState) -> BlockM:
    """[[0, P], [Q, L+(1) L-(2)]]"""
    tilde = block_M_tilde(swap(state))
    return BlockM("Mstar", state.n, tilde.matrix)


def block_M_star_tilde(state_tilde: YBState) -> BlockM:
    """[[0, Q~], [P~, L~-(2) L~+(1)]]"""
    m = block_M(swap(state_tilde))
    return BlockM("Mstar_tilde", state_tilde.n, m.matrix)
