"""
Exact scalar towers

QRat is sympy's QQ; rational functions in q (and lam, mu, or named classical
coordinates) are elements of cached sympy fraction fields under grlex order.
Laurent monomials are ordinary field elements.
"""

from functools import lru_cache
from typing import Any, Iterable, Mapping, Optional, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, FracField, field
from sympy.polys.orderings import grlex

from ncyb.utils.exceptions import NotInvertible, TowerMismatch

SPECTRAL_VARIABLES = ("q", "lam", "mu")

Scalar = Any


@lru_cache(maxsize=None)
def get_field(names: Tuple[str, ...]) -> FracField:
    """Rational-function field over QQ in `names` (order as given, grlex)."""
    if not names:
        raise TowerMismatch("a rational-function field needs at least one variable")
    K, *_ = field(",".join(names), QQ, order=grlex)
    return K


def qfield() -> FracField:
    return get_field(("q",))


def spectral_field() -> FracField:
    """q, lam, mu in that order."""
    return get_field(SPECTRAL_VARIABLES)


def gen(K: FracField, name: str) -> FracElement:
    names = [str(s) for s in K.symbols]
    if name not in names:
        raise TowerMismatch(f"{name} is not a variable of {K}")
    return K.gens[names.index(name)]


def q_power(m: int, K: Optional[FracField] = None) -> FracElement:
    """q**m for any integer m, canonical."""
    K = K or qfield()
    q = gen(K, "q")
    if m >= 0:
        return q**m
    return K.one / q ** (-m)


def qrat(numer: int, denom: int = 1) -> Scalar:
    if denom == 0:
        raise NotInvertible("zero denominator")
    return QQ(numer, denom)


def is_frac(x: Any) -> bool:
    return isinstance(x, FracElement)


def _check_tower(a: Any, b: Any) -> None:
    if is_frac(a) and is_frac(b) and a.field != b.field:
        raise TowerMismatch(
            f"operands in different towers: {tuple(map(str, a.field.symbols))} "
            f"vs {tuple(map(str, b.field.symbols))}"
        )


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """add/sub/mul of two scalars of one tower (QRat, rational function, DualNum, series)."""
    _check_tower(a, b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def scalar_is_zero(a: Scalar) -> bool:
    if hasattr(a, "is_zero") and callable(a.is_zero):
        return bool(a.is_zero())
    return not a


def scalar_invert(a: Scalar) -> Scalar:
    if hasattr(a, "inverse"):
        return a.inverse()
    if not a:
        raise NotInvertible("zero has no inverse")
    if is_frac(a):
        return a.field.one / a
    return QQ.one / QQ.convert(a)


def scalar_equal(a: Scalar, b: Scalar) -> bool:
    _check_tower(a, b)
    return scalar_is_zero(a - b)


def normalize(x: FracElement) -> FracElement:
    """Cancelled form with monic denominator under the field's monomial order."""
    K = x.field
    numer, denom = x.numer.cancel(x.denom)
    lc = denom.LC
    return K.raw_new(numer.quo_ground(lc), denom.quo_ground(lc))


def embed(x: Union[FracElement, Scalar], K: FracField) -> FracElement:
    """Move `x` into the larger field `K` (variables matched by name)."""
    if not is_frac(x):
        return K.one * x
    src = [str(s) for s in x.field.symbols]
    dst = [str(s) for s in K.symbols]
    missing = [s for s in src if s not in dst]
    if missing:
        raise TowerMismatch(f"cannot embed: {missing} absent from target field")
    return x.set_field(K)


def eval_q(x: FracElement, value: Scalar, name: str = "q") -> Scalar:
    """Substitute a rational for one variable.

    Univariate input yields a QRat; otherwise the result stays in the field.
    """
    K = x.field
    g = gen(K, name)
    value = QQ.convert(value)
    if K.ngens == 1:
        numer = x.numer.evaluate(g.to_poly(), value)
        denom = x.denom.evaluate(g.to_poly(), value)
        numer, denom = QQ.convert(numer), QQ.convert(denom)
        if not denom:
            raise NotInvertible(f"denominator of {x} vanishes at {name}={value}")
        return numer / denom
    denom = x.denom.subs(g.to_poly(), value)
    if not denom:
        raise NotInvertible(f"denominator of {x} vanishes at {name}={value}")
    return x.subs(g, value)


def to_dual(x: Union[FracElement, Scalar]) -> "DualNum":
    """Image of a rational function of q at q = 1 + h, h**2 = 0."""
    from ncyb.ring.dual import DualNum

    if not is_frac(x):
        return DualNum(QQ.convert(x), QQ.zero)
    if [str(s) for s in x.field.symbols] != ["q"]:
        raise TowerMismatch("dual images are taken of univariate q functions only")
    q = gen(x.field, "q")
    return DualNum(eval_q(x, 1), eval_q(x.diff(q), 1))


def q_number(k: int, base: FracElement) -> FracElement:
    """(k)_b = (1 - b**k) / (1 - b)."""
    K = base.field
    return (K.one - base**k) / (K.one - base)


def q_factorial(k: int, base: FracElement) -> FracElement:
    out = base.field.one
    for m in range(1, k + 1):
        out = out * q_number(m, base)
    return out


def product(items: Iterable[Scalar], one: Scalar) -> Scalar:
    out = one
    for item in items:
        out = out * item
    return out


def substitute(x: Union[FracElement, Scalar], images: Mapping[str, Any], ops: Any) -> Any:
    """Image of a rational function under variable -> value, computed in `ops`' ring.

    Monomials are multiplied in the field's variable order, so operator images
    must commute for the result to be meaningful. Raises NotInvertible when the
    image of the denominator vanishes.
    """
    if not is_frac(x):
        return ops.convert(x)
    names = [str(s) for s in x.field.symbols]

    def poly(p) -> Any:
        acc = ops.zero()
        for monom, coeff in p.terms():
            term = ops.convert(coeff)
            for name, e in zip(names, monom):
                if not e:
                    continue
                if name not in images:
                    raise TowerMismatch(f"no value given for {name}")
                for _ in range(e):
                    term = ops.mul(term, images[name])
            acc = ops.add(acc, term)
        return acc

    denom = poly(x.denom)
    if ops.is_zero(denom):
        raise NotInvertible(f"denominator of {x} vanishes")
    return ops.mul(poly(x.numer), ops.try_invert(denom))
