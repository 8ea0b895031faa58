"""
Truncated power series in x with rational-function coefficients

Backed by sympy's ring_series on a polynomial ring over the coefficient field;
order K keeps x**0 .. x**K.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, List, Sequence

from sympy.polys.fields import FracField
from sympy.polys.ring_series import rs_mul, rs_series_inversion, rs_trunc
from sympy.polys.rings import PolyElement, PolyRing, ring

from ncyb.ring.tower import q_factorial, q_power, qfield
from ncyb.utils.exceptions import NotInvertible, TowerMismatch


@lru_cache(maxsize=None)
def series_ring(K: FracField) -> PolyRing:
    R, _ = ring("x", K.to_domain())
    return R


@dataclass(frozen=True)
class TruncSeries:
    """sum_k c_k x**k mod x**(order+1)"""

    poly: PolyElement
    order: int

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[Any], order: int, K: FracField) -> "TruncSeries":
        R = series_ring(K)
        terms = {(k,): K.one * c for k, c in enumerate(coeffs[: order + 1]) if c}
        return cls(R.from_dict(terms), order)

    @property
    def ring(self) -> PolyRing:
        return self.poly.ring

    @property
    def x(self) -> PolyElement:
        return self.ring.gens[0]

    def coefficient(self, k: int) -> Any:
        return self.poly.get((k,), self.ring.domain.zero)

    def coefficients(self) -> List[Any]:
        return [self.coefficient(k) for k in range(self.order + 1)]

    def _check(self, other: "TruncSeries") -> None:
        if self.ring != other.ring:
            raise TowerMismatch("series over different coefficient fields")
        if self.order != other.order:
            raise TowerMismatch(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        return TruncSeries(self.poly + other.poly, self.order)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        return TruncSeries(self.poly - other.poly, self.order)

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(-self.poly, self.order)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        return TruncSeries(rs_mul(self.poly, other.poly, self.x, self.order + 1), self.order)

    def inverse(self) -> "TruncSeries":
        if not self.coefficient(0):
            raise NotInvertible("series with zero constant term")
        return TruncSeries(rs_series_inversion(self.poly, self.x, self.order + 1), self.order)

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(rs_trunc(self.poly, self.x, order + 1), order)

    def is_zero(self) -> bool:
        return not self.poly

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and not (self.poly - other.poly)

    def __hash__(self) -> int:
        return hash((str(self.poly), self.order))


def series_substitute_scaled(s: TruncSeries, c: Any) -> TruncSeries:
    """s(c*x): coefficient k is multiplied by c**k."""
    dom = s.ring.domain
    c = dom.one * c
    terms = {}
    power = dom.one
    for k in range(s.order + 1):
        ck = s.coefficient(k)
        if ck:
            terms[(k,)] = ck * power
        power = power * c
    return TruncSeries(s.ring.from_dict(terms), s.order)


def q_exp_series(order: int, K: FracField = None) -> TruncSeries:
    """f(x) = exp_{q^-2}((q - q^-1)^-1 x) truncated at `order`."""
    K = K or qfield()
    base = q_power(-2, K)
    scale = K.one / (q_power(1, K) - q_power(-1, K))
    coeffs = [scale**k / q_factorial(k, base) for k in range(order + 1)]
    return TruncSeries.from_coefficients(coeffs, order, K)


def geometric_series(c: Any, order: int, K: FracField = None) -> TruncSeries:
    """1 / (1 - c*x) truncated."""
    K = K or qfield()
    return TruncSeries.from_coefficients([c**k for k in range(order + 1)], order, K)


LI2_TERMS = 64


def li2(x: float) -> float:
    """Real dilogarithm -int_0^x log(1-t)/t dt for x < 1.

    The defining series is summed for |x| <= 1/2; (1/2, 1) is reflected to
    1 - x and x < -1/2 is mapped into (0, 1) by x -> x/(x-1).
    """
    if x >= 1:
        if x == 1:
            return math.pi**2 / 6
        raise ValueError("li2 is real only for x <= 1")
    if x < -0.5:
        y = x / (x - 1)
        return -li2(y) - 0.5 * math.log1p(-x) ** 2
    if x > 0.5:
        return math.pi**2 / 6 - math.log(x) * math.log1p(-x) - li2(1 - x)
    return math.fsum(x**k / (k * k) for k in range(1, LI2_TERMS + 1))
