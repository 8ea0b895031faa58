"""
Dual numbers a + b*h with h**2 = 0

The quasi-classical parameter enters as q = 1 + h; the h-part of a commutator,
halved, is the classical Poisson bracket.
"""

from dataclasses import dataclass
from typing import Any

from sympy.polys.domains import QQ

from ncyb.utils.exceptions import NotInvertible


@dataclass(frozen=True)
class DualNum:
    """classical + h_part*h over any commutative base scalar"""

    classical: Any
    h_part: Any = QQ.zero

    @staticmethod
    def lift(other: Any) -> "DualNum":
        if isinstance(other, DualNum):
            return other
        return DualNum(other, other * 0)

    def __add__(self, other: Any) -> "DualNum":
        o = DualNum.lift(other)
        return DualNum(self.classical + o.classical, self.h_part + o.h_part)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "DualNum":
        o = DualNum.lift(other)
        return DualNum(self.classical - o.classical, self.h_part - o.h_part)

    def __rsub__(self, other: Any) -> "DualNum":
        return DualNum.lift(other) - self

    def __neg__(self) -> "DualNum":
        return DualNum(-self.classical, -self.h_part)

    def __mul__(self, other: Any) -> "DualNum":
        o = DualNum.lift(other)
        return DualNum(
            self.classical * o.classical,
            self.classical * o.h_part + self.h_part * o.classical,
        )

    __rmul__ = __mul__

    def inverse(self) -> "DualNum":
        if not self.classical:
            raise NotInvertible(f"{self} has zero classical part")
        inv = 1 / self.classical if not hasattr(self.classical, "field") else (
            self.classical.field.one / self.classical
        )
        return DualNum(inv, -self.h_part * inv * inv)

    def __truediv__(self, other: Any) -> "DualNum":
        return self * DualNum.lift(other).inverse()

    def __rtruediv__(self, other: Any) -> "DualNum":
        return DualNum.lift(other) * self.inverse()

    def __pow__(self, m: int) -> "DualNum":
        if m < 0:
            return self.inverse() ** (-m)
        out = DualNum.lift(self.classical * 0 + 1)
        for _ in range(m):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.classical and not self.h_part

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        try:
            return (self - DualNum.lift(other)).is_zero()
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((str(self.classical), str(self.h_part)))

    def __str__(self) -> str:
        return f"{self.classical} + ({self.h_part})*h"


H = DualNum(QQ.zero, QQ.one)


def q_dual(m: int = 1) -> DualNum:
    """q**m at q = 1 + h."""
    return DualNum(QQ.one, QQ(m))


def _map(obj: Any, pick) -> Any:
    from ncyb.matrix.labeled import LabeledMat

    if isinstance(obj, DualNum):
        return pick(obj)
    if isinstance(obj, LabeledMat):
        return obj.map_entries(lambda e: _map(e, pick), _base_ops_of(obj))
    if isinstance(obj, dict):
        return {k: _map(v, pick) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return type(obj)(_map(v, pick) for v in obj)
    return pick(DualNum.lift(obj))


def _base_ops_of(obj: Any) -> Any:
    from ncyb.matrix.ops import DualOps, MatrixOps, RationalOps

    ops = obj.ops
    if isinstance(ops, DualOps):
        return ops.base
    if isinstance(ops, MatrixOps):
        return MatrixOps(_base_ops_of_ops(ops.entry_ops), ops.dim)
    return RationalOps()


def _base_ops_of_ops(ops: Any) -> Any:
    from ncyb.matrix.ops import DualOps, MatrixOps

    if isinstance(ops, DualOps):
        return ops.base
    if isinstance(ops, MatrixOps):
        return MatrixOps(_base_ops_of_ops(ops.entry_ops), ops.dim)
    return ops


def dual_h_coefficient(obj: Any) -> Any:
    """O(h) part of a DualNum-valued scalar, matrix, or container, componentwise."""
    return _map(obj, lambda d: d.h_part)


def dual_classical_part(obj: Any) -> Any:
    return _map(obj, lambda d: d.classical)
