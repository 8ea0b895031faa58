"""
Value tables for the Yang-Baxter map

A state holds, per tensor component a, the operator matrices L^{+(a)} (upper
triangular) and L^{-(a)} (lower triangular) whose entries act on one carrier
space. Maps never touch abstract generators; they substitute values.
"""

from dataclasses import dataclass, replace
from math import prod
from typing import Callable, List, Sequence, Tuple

from ncyb.core.report import Check, compare, failed, passed
from ncyb.matrix.inverse import field_inverse
from ncyb.matrix.labeled import LabeledMat, commutator, embed_operator, kron_all, mat_mul
from ncyb.matrix.ops import MatrixOps
from ncyb.uqrep.loperators import GAUGES, build_L_operators
from ncyb.uqrep.rep import Rep
from ncyb.utils.exceptions import ShapeError, WeightError


@dataclass(frozen=True)
class Component:
    """L^+ and L^- of one tensor component"""

    Lplus: LabeledMat
    Lminus: LabeledMat

    def get(self, sign: int) -> LabeledMat:
        return self.Lplus if sign > 0 else self.Lminus

    def map_values(self, f: Callable[[LabeledMat], LabeledMat]) -> "Component":
        return Component(self.Lplus.map_entries(f), self.Lminus.map_entries(f))

    def values(self) -> List[LabeledMat]:
        """Structurally nonzero entries of both matrices."""
        return [v for L in (self.Lplus, self.Lminus) for _, _, v in L.nonzeros()]


@dataclass(frozen=True)
class YBState:
    n: int
    dims: Tuple[int, ...]
    components: Tuple[Component, ...]
    gauge: str = "twisted"

    @property
    def dim(self) -> int:
        return prod(self.dims)

    @property
    def ops(self) -> MatrixOps:
        return self.components[0].Lplus.ops

    def L(self, a: int, sign: int) -> LabeledMat:
        """L^{+-(a)}, components counted from 1."""
        return self.components[a - 1].get(sign)

    def u(self, a: int, k: int) -> LabeledMat:
        """u_k^{(a)} = L^{+(a)}_kk, with u_0 = 1."""
        if k == 0:
            return self.ops.one()
        return self.L(a, 1).entry(k, k)

    def pair(self, a: int, b: int) -> "YBState":
        """Components a and b as a two-component state on the same carrier."""
        return replace(self, components=(self.components[a - 1], self.components[b - 1]))

    def put_pair(self, a: int, b: int, pair: "YBState") -> "YBState":
        comps = list(self.components)
        comps[a - 1], comps[b - 1] = pair.components
        return replace(self, components=tuple(comps))

    def map_values(self, f: Callable[[LabeledMat], LabeledMat]) -> "YBState":
        return replace(self, components=tuple(c.map_values(f) for c in self.components))

    def equals(self, other: "YBState") -> bool:
        return len(self.components) == len(other.components) and all(
            a.Lplus.equals(b.Lplus) and a.Lminus.equals(b.Lminus)
            for a, b in zip(self.components, other.components)
        )

    def compare(self, name: str, anchor: str, other: "YBState") -> Check:
        """First differing generator value, labelled by component and sign."""
        for a, (x, y) in enumerate(zip(self.components, other.components), start=1):
            for sign, lx, ly in ((1, x.Lplus, y.Lplus), (-1, x.Lminus, y.Lminus)):
                check = compare(name, anchor, lx, ly)
                if check.detail is not None:
                    where = {"component": a, "sign": "+" if sign > 0 else "-"}
                    check.detail = {**where, **check.detail}
                    return check
        return passed(name, anchor)

    def validate(self, tag: str = "state") -> List[Check]:
        """Triangularity, the diagonal dictionary and component commutativity."""
        checks: List[Check] = []
        for a, comp in enumerate(self.components, start=1):
            upper = all(
                comp.Lplus.entry(j, i).is_zero() and comp.Lminus.entry(i, j).is_zero()
                for i in range(1, self.n + 1)
                for j in range(i + 1, self.n + 1)
            )
            name = f"{tag}: component {a} triangular"
            checks.append(passed(name, "triangularity") if upper else failed(name, "triangularity"))
            for k in range(1, self.n + 1):
                if self.gauge == "twisted":
                    rhs = self.u(a, k - 1)
                else:
                    rhs = field_inverse(self.u(a, k))
                checks.append(
                    compare(
                        f"{tag}: L-({a})_{k}{k} from u_{k}",
                        "diagonal dictionary",
                        comp.Lminus.entry(k, k),
                        rhs,
                    )
                )
        for a in range(len(self.components)):
            for b in range(a + 1, len(self.components)):
                xs = self.components[a].values()
                ys = self.components[b].values()
                bad = next(
                    ((x, y) for x in xs for y in ys if not commutator(x, y).is_zero()), None
                )
                name = f"{tag}: components {a + 1}, {b + 1} commute"
                if bad is None:
                    checks.append(passed(name, "component commutativity"))
                else:
                    detail = {"x": bad[0].describe(), "y": bad[1].describe()}
                    checks.append(failed(name, "component commutativity", detail))
        return checks


def _lift(L: LabeledMat, slot: int, dims: Sequence[int]) -> LabeledMat:
    ops = MatrixOps(L.ops.entry_ops, prod(dims))
    return L.map_entries(lambda v: embed_operator(v, (slot,), dims), ops)


def state_from_reps(reps: Sequence[Rep], gauge: str = "twisted") -> YBState:
    """Component a carries the L-operators of reps[a] on tensor factor a."""
    if gauge not in GAUGES:
        raise WeightError(f"unknown gauge {gauge!r}")
    n = reps[0].n
    if any(r.n != n for r in reps):
        raise ShapeError("representations of different rank")
    dims = tuple(r.dim for r in reps)
    comps = []
    for slot, r in enumerate(reps):
        pair = build_L_operators(r, gauge)
        comps.append(Component(_lift(pair.Lplus, slot, dims), _lift(pair.Lminus, slot, dims)))
    return YBState(n, dims, tuple(comps), gauge)


def state_from_rep(r1: Rep, r2: Rep, gauge: str = "twisted") -> YBState:
    return state_from_reps((r1, r2), gauge)


def triple_state(r1: Rep, r2: Rep, r3: Rep, gauge: str = "twisted") -> YBState:
    return state_from_reps((r1, r2, r3), gauge)


def adjoint_map(state: YBState, Rimg: LabeledMat, invert: bool = False) -> YBState:
    """x -> R x R^-1 on every value (R^-1 x R when invert)."""
    if Rimg.shape != (state.dim, state.dim):
        raise ShapeError(f"R image of shape {Rimg.shape} on a carrier of dim {state.dim}")
    Rinv = field_inverse(Rimg)
    left, right = (Rinv, Rimg) if invert else (Rimg, Rinv)
    return state.map_values(lambda x: mat_mul(mat_mul(left, x), right))


def pair_operator(state: YBState, X: LabeledMat, a: int, b: int) -> LabeledMat:
    """An operator on factors (a, b) placed on the full carrier."""
    return embed_operator(X, (a - 1, b - 1), state.dims)


def swap(state: YBState) -> YBState:
    """Exchange the superscripts (1) and (2)."""
    first, second = state.components[:2]
    return replace(state, components=(second, first, *state.components[2:]))


def merge(state: YBState, a: int, b: int) -> Component:
    """delta on values: L^{+-} = L^{+-(b)} L^{+-(a)}."""
    x, y = state.components[a - 1], state.components[b - 1]
    return Component(mat_mul(y.Lplus, x.Lplus), mat_mul(y.Lminus, x.Lminus))


def delta(state: YBState, a: int, b: int) -> YBState:
    """Merge components a < b into one, placed at position a."""
    comps = list(state.components)
    comps[a - 1] = merge(state, a, b)
    del comps[b - 1]
    return replace(state, components=tuple(comps))


def diagonal_part(state: YBState) -> YBState:
    """Off-diagonal values set to zero."""
    zero = state.ops.zero()

    def keep_diagonal(L: LabeledMat) -> LabeledMat:
        grid = [
            [L.entries[r][c] if r == c else zero for c in range(state.n)]
            for r in range(state.n)
        ]
        return LabeledMat(L.rows, L.cols, grid, L.ops)

    comps = tuple(
        Component(keep_diagonal(c.Lplus), keep_diagonal(c.Lminus)) for c in state.components
    )
    return replace(state, components=comps)


def carrier_identity(state: YBState) -> LabeledMat:
    return kron_all([LabeledMat.identity(d, state.ops.entry_ops) for d in state.dims])
