"""
Commutative value tables for the classical Yang-Baxter map

A ClassicalState is a YBState whose values are scalars of one field: either
independent coordinates of a rational-function field (symbolic) or seeded
rationals (numeric). Coordinates of component a are named

    u{k}_{a} = ell+(a)_kk,   lp{i}{j}_{a} = ell+(a)_ij,   lm{j}{i}_{a} = ell-(a)_ji   (i < j)

and ell-(a)_kk = u{k-1}_{a} with u0 = 1. Under the sl constraint u{n}_{a} = 1.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Sequence, Tuple

from sympy.polys.domains import QQ

from ncyb.core.report import Check, compare, failed, passed
from ncyb.core.rng import SeedStream
from ncyb.matrix.labeled import LabeledMat
from ncyb.matrix.ops import FieldOps
from ncyb.ring.tower import gen, get_field
from ncyb.utils.exceptions import ConfigurationError
from ncyb.ybmap.state import Component, YBState

MODES = ("symbolic", "numeric")


@dataclass(frozen=True)
class ClassicalState(YBState):
    """Two (or more) components of commuting scalar values"""

    mode: str = "numeric"
    sl: bool = False

    def entry_values(self, a: int) -> Dict[str, Any]:
        """Independent values of component a, keyed by coordinate name."""
        comp = self.components[a - 1]
        out: Dict[str, Any] = {}
        for i in range(1, self.n + 1):
            out[u_name(i, a)] = comp.Lplus.entry(i, i)
            for j in range(i + 1, self.n + 1):
                out[lp_name(i, j, a)] = comp.Lplus.entry(i, j)
                out[lm_name(j, i, a)] = comp.Lminus.entry(j, i)
        return out

    def validate(self, tag: str = "state") -> List[Check]:
        """Triangularity, the diagonal dictionary and the optional sl constraint."""
        ops = self.ops
        checks: List[Check] = []
        for a, comp in enumerate(self.components, start=1):
            upper = all(
                ops.is_zero(comp.Lplus.entry(j, i)) and ops.is_zero(comp.Lminus.entry(i, j))
                for i in range(1, self.n + 1)
                for j in range(i + 1, self.n + 1)
            )
            name = f"{tag}: component {a} triangular"
            checks.append(passed(name, "triangularity") if upper else failed(name, "triangularity"))
            for k in range(1, self.n + 1):
                checks.append(
                    compare(
                        f"{tag}: ell-({a})_{k}{k} = u_{k - 1}",
                        "diagonal dictionary",
                        comp.Lminus.entry(k, k),
                        self.u(a, k - 1),
                    )
                )
            if self.sl:
                checks.append(
                    compare(f"{tag}: u_{self.n}^({a}) = 1", "sl constraint", self.u(a, self.n), 1)
                )
        return checks


def u_name(k: int, a: int) -> str:
    return f"u{k}_{a}"


def lp_name(i: int, j: int, a: int) -> str:
    return f"lp{i}{j}_{a}"


def lm_name(j: int, i: int, a: int) -> str:
    return f"lm{j}{i}_{a}"


def coordinate_names(n: int, components: int = 2, sl: bool = False) -> Tuple[str, ...]:
    names: List[str] = []
    for a in range(1, components + 1):
        names += [u_name(k, a) for k in range(1, n + 1) if not (sl and k == n)]
        names += [lp_name(i, j, a) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        names += [lm_name(j, i, a) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return tuple(names)


def _component(n: int, a: int, values: Mapping[str, Any], ops: FieldOps, sl: bool) -> Component:
    one = ops.one()

    def u(k: int) -> Any:
        if k == 0 or (sl and k == n):
            return one
        return ops.convert(values[u_name(k, a)])

    plus: Dict[Tuple[int, int], Any] = {}
    minus: Dict[Tuple[int, int], Any] = {}
    for i in range(1, n + 1):
        plus[(i, i)] = u(i)
        minus[(i, i)] = u(i - 1)
        for j in range(i + 1, n + 1):
            plus[(i, j)] = ops.convert(values[lp_name(i, j, a)])
            minus[(j, i)] = ops.convert(values[lm_name(j, i, a)])
    return Component(
        LabeledMat.from_dict(n, n, plus, ops), LabeledMat.from_dict(n, n, minus, ops)
    )


def state_from_values(
    n: int,
    values: Mapping[str, Any],
    ops: FieldOps,
    components: int = 2,
    mode: str = "numeric",
    sl: bool = False,
) -> ClassicalState:
    """Assemble a state from named coordinate values; missing names raise KeyError."""
    if mode not in MODES:
        raise ConfigurationError(f"unknown classical mode {mode!r}")
    comps = tuple(_component(n, a, values, ops, sl) for a in range(1, components + 1))
    return ClassicalState(n, (), comps, "twisted", mode=mode, sl=sl)


def symbolic_state(n: int, components: int = 2, sl: bool = False) -> ClassicalState:
    """Every coordinate an independent variable of one rational-function field."""
    names = coordinate_names(n, components, sl)
    K = get_field(names)
    values = {name: gen(K, name) for name in names}
    return state_from_values(n, values, FieldOps(K), components, "symbolic", sl)


def numeric_state(
    n: int, stream: SeedStream, components: int = 2, sl: bool = False
) -> ClassicalState:
    """Nonzero small rationals drawn from `stream`."""
    names = coordinate_names(n, components, sl)
    values = {name: stream.rational() for name in names}
    return state_from_values(n, values, FieldOps(QQ), components, "numeric", sl)


def state_from_components(comps: Sequence[Component], mode: str = "symbolic") -> ClassicalState:
    """Wrap ready-made ell matrices, e.g. those of classical_L."""
    n = comps[0].Lplus.shape[0]
    return ClassicalState(n, (), tuple(comps), "twisted", mode=mode)
