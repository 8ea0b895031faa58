"""L-operators: n x n matrices whose entries are operators on a representation"""

from dataclasses import dataclass
from typing import Any, Dict, Tuple

from ncyb.matrix.labeled import LabeledMat, embed_operator, flatten, mat_mul, unflatten
from ncyb.matrix.ops import MatrixOps
from ncyb.uqrep.rep import Rep
from ncyb.uqrep.rmatrix import universal_R_image
from ncyb.utils.exceptions import WeightError

GAUGES = ("plain", "twisted")


@dataclass(frozen=True)
class LPair:
    Lminus: LabeledMat
    Lplus: LabeledMat
    gauge: str
    rep: Rep

    @property
    def n(self) -> int:
        return self.rep.n

    def get(self, sign: int) -> LabeledMat:
        return self.Lplus if sign > 0 else self.Lminus

    def flat(self, sign: int) -> LabeledMat:
        """(pi (x) 1) form on C^n (x) carrier."""
        return flatten(self.get(sign))

    def spectral(self, x: Any) -> LabeledMat:
        """L(x) = x L^+ - x^-1 L^-, flattened."""
        ops = self.rep.ops
        return self.flat(1).scale(x) - self.flat(-1).scale(ops.try_invert(x))

    def lifted(self, sign: int, slot: int, n_aux: int = 2) -> LabeledMat:
        """L acting on auxiliary factor `slot` and the quantum space (last factor)."""
        return lift_aux(self.flat(sign), self.n, self.rep.dim, slot, n_aux)


def lift_aux(L: LabeledMat, n: int, dim: int, slot: int, n_aux: int = 2) -> LabeledMat:
    """Embed an operator on C^n (x) W into (C^n)^{(x) n_aux} (x) W."""
    dims = [n] * n_aux + [dim]
    return embed_operator(L, (slot, n_aux), dims)


def _operator_matrix(entries: Dict[Tuple[int, int], LabeledMat], rep: Rep) -> LabeledMat:
    ops = MatrixOps(rep.ops, rep.dim)
    zero = rep.zero()
    grid = [[entries.get((i, j), zero) for j in range(1, rep.n + 1)] for i in range(1, rep.n + 1)]
    return LabeledMat(range(1, rep.n + 1), range(1, rep.n + 1), grid, ops)


def build_L_operators(r: Rep, gauge: str = "plain") -> LPair:
    """Entry tables of L^+- on the representation r.

    plain:   L^+_kk = q^{E_kk},      L^+_ij = q^{E_ii} E_ji          (i < j)
             L^-_kk = q^{-E_kk},     L^-_ji = -E_ij q^{-E_ii}        (i < j)
    twisted: L^+_kk = q^{2 omega_k}, L^+_ij = q^{omega_i + omega_j} E_ji
             L^-_kk = q^{2 omega_{k-1}}, L^-_ji = -q^{omega_{i-1} + omega_{j-1}} E_ij
    """
    if gauge not in GAUGES:
        raise WeightError(f"unknown gauge {gauge!r}")
    n = r.n
    plus: Dict[Tuple[int, int], LabeledMat] = {}
    minus: Dict[Tuple[int, int], LabeledMat] = {}
    for k in range(1, n + 1):
        if gauge == "plain":
            plus[(k, k)] = r.K(k)
            minus[(k, k)] = r.K(k, -1)
        else:
            plus[(k, k)] = r.q_omega(k, 2)
            minus[(k, k)] = r.q_omega(k - 1, 2)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if gauge == "plain":
                plus[(i, j)] = mat_mul(r.K(i), r.E(j, i))
                minus[(j, i)] = -mat_mul(r.E(i, j), r.K(i, -1))
            else:
                plus[(i, j)] = mat_mul(_omega_sum(r, i, j), r.E(j, i))
                minus[(j, i)] = -mat_mul(_omega_sum(r, i - 1, j - 1), r.E(i, j))
    return LPair(_operator_matrix(minus, r), _operator_matrix(plus, r), gauge, r)


def _omega_sum(r: Rep, a: int, b: int) -> LabeledMat:
    """q^{omega_a + omega_b}"""
    coeffs = [(1 if k < a else 0) + (1 if k < b else 0) for k in range(r.n)]
    return r.q_cartan(coeffs)


def L_from_universal(fund: Rep, r: Rep, gauge: str = "plain") -> LPair:
    """(pi (x) 1) of the universal R and R*, cut into operator blocks."""
    kinds = ("R", "Rstar") if gauge == "plain" else ("R_twisted", "Rstar_twisted")
    labels = range(1, fund.dim + 1)
    plus = unflatten(universal_R_image(fund, r, kinds[0]), labels, labels, r.dim)
    minus = unflatten(universal_R_image(fund, r, kinds[1]), labels, labels, r.dim)
    return LPair(minus, plus, gauge, r)
