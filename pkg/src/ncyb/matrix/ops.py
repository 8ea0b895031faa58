"""
Ring contracts for matrix entries

Entries may be rationals, rational functions, dual numbers, or operators
(square LabeledMat over one of those). Multiplication never reorders operands.
"""

from abc import ABC, abstractmethod
from typing import Any, Union

from sympy.polys.domains import QQ
from sympy.polys.fields import FracField

from ncyb.ring.dual import DualNum
from ncyb.utils.exceptions import NotInvertible


class RingOps(ABC):
    """Arithmetic of one entry ring"""

    commutative: bool = True
    supports_matrix_inverse: bool = False

    @abstractmethod
    def zero(self) -> Any: ...

    @abstractmethod
    def one(self) -> Any: ...

    @abstractmethod
    def convert(self, x: Any) -> Any: ...

    @abstractmethod
    def try_invert(self, a: Any) -> Any:
        """Two-sided inverse, or NotInvertible."""

    def add(self, a: Any, b: Any) -> Any:
        return a + b

    def sub(self, a: Any, b: Any) -> Any:
        return a - b

    def mul(self, a: Any, b: Any) -> Any:
        return a * b

    def neg(self, a: Any) -> Any:
        return -a

    def is_zero(self, a: Any) -> bool:
        return not a

    def equals(self, a: Any, b: Any) -> bool:
        return self.is_zero(self.sub(a, b))

    def describe(self, a: Any) -> str:
        return str(a)


class FieldOps(RingOps):
    """QQ or a sympy rational-function field"""

    supports_matrix_inverse = True

    def __init__(self, domain: Union[FracField, Any] = QQ):
        self.domain = domain

    @property
    def is_rational(self) -> bool:
        return self.domain == QQ

    def zero(self) -> Any:
        return self.domain.zero

    def one(self) -> Any:
        return self.domain.one

    def convert(self, x: Any) -> Any:
        if self.is_rational:
            return QQ.convert(x)
        return self.domain.one * x

    def try_invert(self, a: Any) -> Any:
        if not a:
            raise NotInvertible("zero has no inverse")
        return self.domain.one / a

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldOps) and other.domain == self.domain

    def __hash__(self) -> int:
        return hash(("field", str(self.domain)))

    def __repr__(self) -> str:
        return f"FieldOps({self.domain})"


class RationalOps(FieldOps):
    """QQ"""

    def __init__(self) -> None:
        super().__init__(QQ)


class DualOps(RingOps):
    """Dual numbers over a commutative base field"""

    supports_matrix_inverse = True

    def __init__(self, base: RingOps):
        self.base = base

    def zero(self) -> DualNum:
        return DualNum(self.base.zero(), self.base.zero())

    def one(self) -> DualNum:
        return DualNum(self.base.one(), self.base.zero())

    def convert(self, x: Any) -> DualNum:
        if isinstance(x, DualNum):
            return x
        return DualNum(self.base.convert(x), self.base.zero())

    def try_invert(self, a: DualNum) -> DualNum:
        return a.inverse()

    def is_zero(self, a: DualNum) -> bool:
        return a.is_zero()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DualOps) and other.base == self.base

    def __hash__(self) -> int:
        return hash(("dual", self.base))

    def __repr__(self) -> str:
        return f"DualOps({self.base!r})"


class MatrixOps(RingOps):
    """dim x dim operators with entries in `entry_ops`"""

    commutative = False

    def __init__(self, entry_ops: RingOps, dim: int):
        self.entry_ops = entry_ops
        self.dim = dim
        self.supports_matrix_inverse = entry_ops.supports_matrix_inverse

    def zero(self) -> Any:
        from ncyb.matrix.labeled import LabeledMat

        return LabeledMat.zeros(self.dim, self.dim, self.entry_ops)

    def one(self) -> Any:
        from ncyb.matrix.labeled import LabeledMat

        return LabeledMat.identity(self.dim, self.entry_ops)

    def convert(self, x: Any) -> Any:
        from ncyb.matrix.labeled import LabeledMat

        if isinstance(x, LabeledMat):
            return x
        return self.one().scale(self.entry_ops.convert(x))

    def mul(self, a: Any, b: Any) -> Any:
        return a @ b

    def neg(self, a: Any) -> Any:
        return -a

    def is_zero(self, a: Any) -> bool:
        return a.is_zero()

    def equals(self, a: Any, b: Any) -> bool:
        return a.equals(b)

    def try_invert(self, a: Any) -> Any:
        from ncyb.matrix.inverse import matrix_inverse
        from ncyb.utils.exceptions import Singular

        try:
            return matrix_inverse(a)
        except Singular as e:
            raise NotInvertible(str(e)) from e

    def describe(self, a: Any) -> str:
        return a.describe()

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MatrixOps)
            and other.dim == self.dim
            and other.entry_ops == self.entry_ops
        )

    def __hash__(self) -> int:
        return hash(("matrix", self.dim, self.entry_ops))

    def __repr__(self) -> str:
        return f"MatrixOps({self.entry_ops!r}, {self.dim})"
