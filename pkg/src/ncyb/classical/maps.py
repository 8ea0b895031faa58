"""
The classical Yang-Baxter map as ratios of minor determinants

Forward (J = ell-(1) ell+(2), M = [[0, Q], [P, J]], D_k = |J^{k..n}_{k..n}|,
D_{n+1} = 1, pre(m) = prod_{k<=m} u_k^(1) u_k^(2)):

    ell~+(1)_ij = |M^{i..n}_{j-bar, i+1..n}| pre(i-1) / D_1
    ell~-(1)_ji = |J^{j..n}_{i, j+1..n}| pre(j-1) / D_1
    ell~+(2)_ij = |J^{i, j+1..n}_{j..n}| D_1 / (D_j D_{j+1} pre(j-1))
    ell~-(2)_ji = |M^{j-bar, i+1..n}_{i..n}| D_1 / (D_i D_{i+1} pre(i-1))

Inverse (J~ = ell~+(2) ell~-(1), M~ = [[0, P~], [Q~, J~]], D~_k = |J~^{1..k}_{1..k}|,
D~_0 = 1, pre~(m) = prod_{k<=m} u~_k^(2) u~_k^(1)):

    ell+(1)_ij = |M~^{1..j-1, i-bar}_{1..j}| pre~(j-1) / (D~_{j-1} D~_j)
    ell-(1)_ji = |J~^{1..i-1, j}_{1..i}| pre~(i-1) / (D~_{i-1} D~_i)
    ell+(2)_ij = |J~^{1..i}_{1..i-1, j}| / pre~(i-1)
    ell-(2)_ji = |M~^{1..j}_{1..j-1, i-bar}| / pre~(j-1)

Row and column lists are taken in the order written, so every ratio is the
commutative value of the corresponding quasi-determinant with its sign.
"""

from dataclasses import dataclass, replace
from typing import Any, Dict, List, Sequence, Tuple

from ncyb.classical.state import ClassicalState
from ncyb.core.report import Check, CheckList
from ncyb.matrix.inverse import det, field_inverse
from ncyb.matrix.labeled import LabeledMat, labeled_submatrix, mat_product
from ncyb.matrix.ops import FieldOps
from ncyb.quasidet.gauss import gauss_decompose
from ncyb.utils.exceptions import ZeroMinor
from ncyb.utils.logging import setup_logger
from ncyb.ybmap.blocks import Bar, J_matrix, J_tilde, block_M, block_M_tilde
from ncyb.ybmap.state import Component

logger = setup_logger(__name__)

Entries = Dict[Tuple[int, int], Any]


def _span(a: int, b: int) -> List[int]:
    return list(range(a, b + 1))


def _minor(A: LabeledMat, rows: Sequence[Any], cols: Sequence[Any]) -> Any:
    return det(labeled_submatrix(A, list(rows), list(cols)))


def _nonzero_minor(A: LabeledMat, rows: Sequence[Any], cols: Sequence[Any]) -> Any:
    value = _minor(A, rows, cols)
    if not value:
        raise ZeroMinor(
            f"minor rows={[str(r) for r in rows]} cols={[str(c) for c in cols]} vanishes",
            rows,
            cols,
        )
    return value


def _pair_products(state: ClassicalState, order: Tuple[int, int]) -> List[Any]:
    """pre(0..n-1) for u^(a) u^(b) with (a, b) = order; a zero factor raises."""
    a, b = order
    out = [state.ops.one()]
    for k in range(1, state.n):
        uu = state.u(a, k) * state.u(b, k)
        if not uu:
            raise ZeroMinor(f"u_{k}^({a}) u_{k}^({b}) vanishes", (k,), (k,))
        out.append(out[-1] * uu)
    return out


def _assemble(template: ClassicalState, first: Tuple[Entries, Entries], second) -> ClassicalState:
    n = template.n
    ops = template.ops

    def matrix(values: Entries) -> LabeledMat:
        return LabeledMat.from_dict(n, n, values, ops)

    comps = (
        Component(matrix(first[0]), matrix(first[1])),
        Component(matrix(second[0]), matrix(second[1])),
    )
    return replace(template, components=comps)


def senior_minors(J: LabeledMat) -> List[Any]:
    """[D_1, ..., D_n, D_{n+1} = 1] for the lower-right corners of J."""
    n = J.shape[0]
    D = [None] + [_nonzero_minor(J, _span(k, n), _span(k, n)) for k in range(1, n + 1)]
    D.append(J.ops.one())
    return D


def junior_minors(Jt: LabeledMat) -> List[Any]:
    """[D~_0 = 1, D~_1, ..., D~_n] for the upper-left corners of J~."""
    n = Jt.shape[0]
    return [Jt.ops.one()] + [_nonzero_minor(Jt, _span(1, k), _span(1, k)) for k in range(1, n + 1)]


def classical_forward_map(state: ClassicalState) -> ClassicalState:
    """(ell(1), ell(2)) -> (ell~(1), ell~(2)) solving the classical zero curvature relations."""
    n = state.n
    J = J_matrix(state)
    M = block_M(state).matrix
    D = senior_minors(J)
    pre = _pair_products(state, (1, 2))

    Lp1: Entries = {}
    Lm1: Entries = {}
    Lp2: Entries = {}
    Lm2: Entries = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            Lp1[(i, j)] = _minor(M, _span(i, n), [Bar(j), *_span(i + 1, n)]) * pre[i - 1] / D[1]
            Lm1[(j, i)] = _minor(J, _span(j, n), [i, *_span(j + 1, n)]) * pre[j - 1] / D[1]
            Lp2[(i, j)] = (
                _minor(J, [i, *_span(j + 1, n)], _span(j, n))
                * D[1]
                / (D[j] * D[j + 1] * pre[j - 1])
            )
            Lm2[(j, i)] = (
                _minor(M, [Bar(j), *_span(i + 1, n)], _span(i, n))
                * D[1]
                / (D[i] * D[i + 1] * pre[i - 1])
            )
    logger.debug("classical forward map evaluated", n=n, mode=state.mode)
    return _assemble(state, (Lp1, Lm1), (Lp2, Lm2))


def classical_inverse_map(state_tilde: ClassicalState) -> ClassicalState:
    """(ell~(1), ell~(2)) -> (ell(1), ell(2)); the inverse of classical_forward_map."""
    n = state_tilde.n
    Jt = J_tilde(state_tilde)
    Mt = block_M_tilde(state_tilde).matrix
    D = junior_minors(Jt)
    pre = _pair_products(state_tilde, (2, 1))

    Lp1: Entries = {}
    Lm1: Entries = {}
    Lp2: Entries = {}
    Lm2: Entries = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            Lp1[(i, j)] = (
                _minor(Mt, [*_span(1, j - 1), Bar(i)], _span(1, j))
                * pre[j - 1]
                / (D[j - 1] * D[j])
            )
            Lm1[(j, i)] = (
                _minor(Jt, [*_span(1, i - 1), j], _span(1, i)) * pre[i - 1] / (D[i - 1] * D[i])
            )
            Lp2[(i, j)] = _minor(Jt, _span(1, i), [*_span(1, i - 1), j]) / pre[i - 1]
            Lm2[(j, i)] = _minor(Mt, _span(1, j), [*_span(1, j - 1), Bar(i)]) / pre[j - 1]
    logger.debug("classical inverse map evaluated", n=n, mode=state_tilde.mode)
    return _assemble(state_tilde, (Lp1, Lm1), (Lp2, Lm2))


def product_formula(state: ClassicalState) -> Tuple[Any, Any]:
    """(|J^{1..n}_{1..n}|, u_n^(2) prod_{k<n} u_k^(1) u_k^(2)), which agree."""
    n = state.n
    rhs = state.u(2, n)
    for k in range(1, n):
        rhs = rhs * state.u(1, k) * state.u(2, k)
    return det(J_matrix(state)), rhs


# Gauss factors of J (senior) and J~ (junior) with determinant-ratio entries


@dataclass(frozen=True)
class ClassicalGauss:
    """Unitriangular E, F, diagonal H and closed-form inverses of E and F"""

    E: LabeledMat
    H: LabeledMat
    F: LabeledMat
    E_inv: LabeledMat
    F_inv: LabeledMat
    variant: str

    def reconstruct(self) -> LabeledMat:
        if self.variant == "senior":
            return mat_product([self.E, self.H, self.F])
        return mat_product([self.F, self.H, self.E])


def _unitriangular(n: int, values: Entries, ops: FieldOps) -> LabeledMat:
    full = {(k, k): ops.one() for k in range(1, n + 1)}
    full.update(values)
    return LabeledMat.from_dict(n, n, full, ops)


def senior_gauss(J: LabeledMat) -> ClassicalGauss:
    """J = E H F with

    H_i = D_i / D_{i+1},  E_ij = |J^{i, j+1..n}_{j..n}| / D_j,  F_ji = |J^{j..n}_{i, j+1..n}| / D_j
    (E^-1)_ij = (-1)^{j-i} |J^{{i..n} - j}_{i+1..n}| / D_{i+1}
    (F^-1)_ji = (-1)^{j-i} |J^{i+1..n}_{{i..n} - j}| / D_{i+1}
    """
    n = J.shape[0]
    ops = J.ops
    D = senior_minors(J)
    E: Entries = {}
    F: Entries = {}
    E_inv: Entries = {}
    F_inv: Entries = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            E[(i, j)] = _minor(J, [i, *_span(j + 1, n)], _span(j, n)) / D[j]
            F[(j, i)] = _minor(J, _span(j, n), [i, *_span(j + 1, n)]) / D[j]
            sign = (-1) ** (j - i)
            rest = [k for k in _span(i, n) if k != j]
            E_inv[(i, j)] = sign * _minor(J, rest, _span(i + 1, n)) / D[i + 1]
            F_inv[(j, i)] = sign * _minor(J, _span(i + 1, n), rest) / D[i + 1]
    H = LabeledMat.diag([D[k] / D[k + 1] for k in range(1, n + 1)], ops)
    return ClassicalGauss(
        _unitriangular(n, E, ops),
        H,
        _unitriangular(n, F, ops),
        _unitriangular(n, E_inv, ops),
        _unitriangular(n, F_inv, ops),
        "senior",
    )


def junior_gauss(Jt: LabeledMat) -> ClassicalGauss:
    """J~ = F~ H~ E~ with

    H~_i = D~_i / D~_{i-1}
    E~_ij = |J~^{1..i}_{1..i-1, j}| / D~_i,  F~_ji = |J~^{1..i-1, j}_{1..i}| / D~_i
    (E~^-1)_ij = (-1)^{j-i} |J~^{1..j-1}_{{1..j} - i}| / D~_{j-1}
    (F~^-1)_ji = (-1)^{j-i} |J~^{{1..j} - i}_{1..j-1}| / D~_{j-1}
    """
    n = Jt.shape[0]
    ops = Jt.ops
    D = junior_minors(Jt)
    E: Entries = {}
    F: Entries = {}
    E_inv: Entries = {}
    F_inv: Entries = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            E[(i, j)] = _minor(Jt, _span(1, i), [*_span(1, i - 1), j]) / D[i]
            F[(j, i)] = _minor(Jt, [*_span(1, i - 1), j], _span(1, i)) / D[i]
            sign = (-1) ** (j - i)
            rest = [k for k in _span(1, j) if k != i]
            E_inv[(i, j)] = sign * _minor(Jt, _span(1, j - 1), rest) / D[j - 1]
            F_inv[(j, i)] = sign * _minor(Jt, rest, _span(1, j - 1)) / D[j - 1]
    H = LabeledMat.diag([D[k] / D[k - 1] for k in range(1, n + 1)], ops)
    return ClassicalGauss(
        _unitriangular(n, E, ops),
        H,
        _unitriangular(n, F, ops),
        _unitriangular(n, E_inv, ops),
        _unitriangular(n, F_inv, ops),
        "junior",
    )


def gauss_checks(state: ClassicalState, state_tilde: ClassicalState, tag: str = "") -> List[Check]:
    """Both factorizations, their inverse formulas, agreement with the quasi-determinant
    decomposition, and the dictionary between Gauss factors and map values."""
    n = state.n
    checks = CheckList()
    anchor = "Gauss factors of matrices with commutative entries"
    J, Jt = J_matrix(state), J_tilde(state_tilde)
    for g, A in ((senior_gauss(J), J), (junior_gauss(Jt), Jt)):
        name = f"{tag}{g.variant}"
        checks.eq(f"{name}: product of factors", anchor, g.reconstruct(), A)
        checks.eq(f"{name}: E^-1 minor formula", anchor, g.E_inv, field_inverse(g.E))
        checks.eq(f"{name}: F^-1 minor formula", anchor, g.F_inv, field_inverse(g.F))
        qd = gauss_decompose(A, g.variant)
        checks.eq(f"{name}: H from quasi-determinants", anchor, g.H, qd.H)
        checks.eq(f"{name}: E from quasi-determinants", anchor, g.E, qd.E)
        checks.eq(f"{name}: F from quasi-determinants", anchor, g.F, qd.F)

    senior, junior = senior_gauss(J), junior_gauss(Jt)
    t, s = state_tilde, state
    anchor = "Gauss factors and map values"
    for i in range(1, n + 1):
        checks.eq(
            f"{tag}H_{i} = u~_{i}^(2) u~_{i - 1}^(1)",
            anchor,
            senior.H.entry(i, i),
            t.u(2, i) * t.u(1, i - 1),
        )
        checks.eq(
            f"{tag}H~_{i} = u_{i}^(2) u_{i - 1}^(1)",
            anchor,
            junior.H.entry(i, i),
            s.u(2, i) * s.u(1, i - 1),
        )
        for j in range(i + 1, n + 1):
            checks.eq(
                f"{tag}E_{i}{j} = ell~+(2)_{i}{j} / u~_{j}^(2)",
                anchor,
                senior.E.entry(i, j),
                t.L(2, 1).entry(i, j) / t.u(2, j),
            )
            checks.eq(
                f"{tag}F_{j}{i} = ell~-(1)_{j}{i} / u~_{j - 1}^(1)",
                anchor,
                senior.F.entry(j, i),
                t.L(1, -1).entry(j, i) / t.u(1, j - 1),
            )
            checks.eq(
                f"{tag}E~_{i}{j} = ell+(2)_{i}{j} / u_{i}^(2)",
                anchor,
                junior.E.entry(i, j),
                s.L(2, 1).entry(i, j) / s.u(2, i),
            )
            checks.eq(
                f"{tag}F~_{j}{i} = ell-(1)_{j}{i} / u_{i - 1}^(1)",
                anchor,
                junior.F.entry(j, i),
                s.L(1, -1).entry(j, i) / s.u(1, i - 1),
            )
    return checks
