"""
Generators of the Poisson algebra P(gl(n)) and the classical L-matrices

Generators are k_1..k_n and e_ij (i != j), realized as variables of a rational
function field. Only brackets among the k and the simple e_{i,i+1}, e_{i+1,i}
are tabulated; composite e_ij are independent variables here and their
brackets come from the Sklyanin structure (see brackets.py).
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, FracField

from ncyb.matrix.labeled import LabeledMat
from ncyb.matrix.ops import FieldOps
from ncyb.ring.tower import gen, get_field
from ncyb.utils.exceptions import UntabulatedBracket
from ncyb.ybmap.state import Component

GAUGES = ("twisted", "plain")

# ("k", l, l) or ("e", i, j)
Gen = Tuple[str, int, int]


def k_gen(l: int) -> Gen:
    return ("k", l, l)


def e_gen(i: int, j: int) -> Gen:
    return ("e", i, j)


def gen_name(g: Gen, suffix: str = "") -> str:
    kind, i, j = g
    base = f"k{i}" if kind == "k" else f"e{i}{j}"
    return base + suffix


def generators(n: int) -> List[Gen]:
    ks = [k_gen(l) for l in range(1, n + 1)]
    es = [e_gen(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    return ks + es


def is_simple(g: Gen) -> bool:
    return g[0] == "e" and abs(g[1] - g[2]) == 1


@dataclass(frozen=True)
class KECoordinates:
    """k and e as variables of a field; `suffix` tells tensor copies apart"""

    n: int
    field: FracField
    suffix: str = ""

    def value(self, g: Gen) -> FracElement:
        return gen(self.field, gen_name(g, self.suffix))

    def k(self, l: int) -> FracElement:
        return self.value(k_gen(l))

    def e(self, i: int, j: int) -> FracElement:
        return self.value(e_gen(i, j))

    def prefix(self, i: int) -> FracElement:
        """k_1 k_2 ... k_i, with the empty product 1."""
        out = self.field.one
        for l in range(1, i + 1):
            out = out * self.k(l)
        return out

    def values(self) -> Dict[Gen, FracElement]:
        return {g: self.value(g) for g in generators(self.n)}


def ke_coordinates(
    n: int, copies: int = 1, extra: Tuple[str, ...] = ()
) -> Tuple[KECoordinates, ...]:
    """`copies` tensor copies of the generators in one shared field, plus `extra` variables."""
    suffixes = [""] if copies == 1 else [f"_{a}" for a in range(1, copies + 1)]
    names = tuple(gen_name(g, s) for s in suffixes for g in generators(n)) + tuple(extra)
    K = get_field(names)
    return tuple(KECoordinates(n, K, s) for s in suffixes)


def bilinear_form(i: int, j: int) -> int:
    """(alpha_i | alpha_j) on simple roots."""
    return 2 * (i == j) - (i + 1 == j) - (i == j + 1)


def root_pairing(alpha: Tuple[int, int], beta: Tuple[int, int]) -> int:
    """(eps_a - eps_b | eps_c - eps_d) for roots given as index pairs (a, b), (c, d)."""
    (a, b), (c, d) = alpha, beta
    return (a == c) - (a == d) - (b == c) + (b == d)


@dataclass(frozen=True)
class PoissonTable:
    """Defining brackets of P(gl(n)) among k_l, e_{i,i+1}, e_{i+1,i}"""

    coords: KECoordinates

    @property
    def n(self) -> int:
        return self.coords.n

    def bracket(self, x: Gen, y: Gen) -> FracElement:
        """{x, y}; UntabulatedBracket for pairs that define composite root vectors."""
        c = self.coords
        if x[0] == "k" and y[0] == "k":
            return c.field.zero
        if x[0] == "e" and y[0] == "k":
            return -self.bracket(y, x)
        if x[0] == "k":
            l = x[1]
            _, i, j = y
            return QQ((i == l) - (j == l), 2) * c.e(i, j) * c.k(l)
        if not (is_simple(x) and is_simple(y)):
            raise UntabulatedBracket(f"{{{gen_name(x)}, {gen_name(y)}}} is not tabulated")
        _, i, j = x
        _, a, b = y
        raising_x, raising_y = i < j, a < b
        if raising_x != raising_y:
            if not raising_x:
                return -self.bracket(y, x)
            if (i, j) != (b, a):
                return c.field.zero
            ratio = c.k(i) / c.k(i + 1)
            return ratio - 1 / ratio
        low_x, low_y = min(i, j), min(a, b)
        if low_x == low_y:
            return c.field.zero
        if abs(low_x - low_y) >= 2:
            return c.field.zero
        raise UntabulatedBracket(f"{{{gen_name(x)}, {gen_name(y)}}} defines a composite root")

    def extended_sign(self, alpha: Tuple[int, int], beta: Tuple[int, int]) -> object:
        """(alpha|beta)/2, the correction of the extended bracket on positive roots."""
        return QQ(root_pairing(alpha, beta), 2)

    def entries(self) -> Dict[Tuple[Gen, Gen], FracElement]:
        """Every tabulated pair, both orders."""
        gens = [g for g in generators(self.n) if g[0] == "k" or is_simple(g)]
        out = {}
        for x in gens:
            for y in gens:
                try:
                    out[(x, y)] = self.bracket(x, y)
                except UntabulatedBracket:
                    continue
        return out


def classical_L(coords: KECoordinates, gauge: str = "twisted") -> Component:
    """l^{+-} (plain) or the twisted ell^{+-} as matrices over the coordinate field.

    twisted:  ell+_ii = (k_1..k_i)^2,  ell+_ij = (k_1..k_i)(k_1..k_j) e_ji
              ell-_ii = (k_1..k_{i-1})^2,  ell-_ji = -(k_1..k_{i-1})(k_1..k_{j-1}) e_ij
    plain:    l+_jj = k_j,  l+_ij = k_i e_ji;  l-_jj = k_j^-1,  l-_ji = -e_ij k_i^-1
    """
    if gauge not in GAUGES:
        raise ValueError(f"unknown gauge {gauge!r}")
    n = coords.n
    ops = FieldOps(coords.field)
    plus: Dict[Tuple[int, int], FracElement] = {}
    minus: Dict[Tuple[int, int], FracElement] = {}
    p = coords.prefix
    for i in range(1, n + 1):
        if gauge == "twisted":
            plus[(i, i)] = p(i) ** 2
            minus[(i, i)] = p(i - 1) ** 2
        else:
            plus[(i, i)] = coords.k(i)
            minus[(i, i)] = 1 / coords.k(i)
        for j in range(i + 1, n + 1):
            if gauge == "twisted":
                plus[(i, j)] = p(i) * p(j) * coords.e(j, i)
                minus[(j, i)] = -p(i - 1) * p(j - 1) * coords.e(i, j)
            else:
                plus[(i, j)] = coords.k(i) * coords.e(j, i)
                minus[(j, i)] = -coords.e(i, j) / coords.k(i)
    return Component(
        LabeledMat.from_dict(n, n, plus, ops), LabeledMat.from_dict(n, n, minus, ops)
    )


def spectral_L(comp: Component, lam: object) -> LabeledMat:
    """ell(lam) = lam ell+ - lam^-1 ell-, entries moved into lam's field by the caller."""
    return comp.Lplus.scale(lam) - comp.Lminus.scale(1 / lam)
