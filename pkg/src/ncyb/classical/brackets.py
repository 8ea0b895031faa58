"""
Poisson brackets on coordinate fields

Three realizations of the quasi-classical bracket:

* CoordinateBracket / LeibnizBracket: a biderivation of a rational-function
  field fixed by the brackets of its variables. For n = 2 every generator pair
  of P(gl(2)) is tabulated, so the defining table is the whole structure.
* SklyaninBracket: {ell1, ell2} = -[s, ell1 ell2] on the independent entries of
  ell+- (one block of s per sign pair), and its pullback to the k, e generators
  by the chain rule.
* dual_poisson_bracket: [a, b] / 2h on operator images at q = 1 + h.
"""

from itertools import combinations
from typing import Any, Dict, Iterable, List, Mapping, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, FracField

from ncyb.classical.coords import (
    Gen,
    KECoordinates,
    PoissonTable,
    classical_L,
    e_gen,
    gen_name,
    generators,
    k_gen,
)
from ncyb.classical.rmatrix import r_pair
from ncyb.classical.state import ClassicalState, lm_name, lp_name, u_name
from ncyb.matrix.labeled import LabeledMat, commutator
from ncyb.matrix.ops import FieldOps
from ncyb.ring.dual import dual_classical_part, dual_h_coefficient
from ncyb.ring.tower import substitute
from ncyb.utils.exceptions import ConfigurationError, NotQuasiCommutative, TowerMismatch
from ncyb.utils.logging import setup_logger

logger = setup_logger(__name__)

# (sign, row, col) of an entry of ell+ (sign 1) or ell- (sign -1)
Position = Tuple[int, int, int]

# block of s used for {ell^s (x), ell^s' (x)}
SIGMA = {(1, 1): 0, (1, -1): 0, (-1, 1): 1, (-1, -1): 0}


class CoordinateBracket:
    """Biderivation of a rational-function field from the brackets of its variables

    {f, g} = sum_{x, y} df/dx dg/dy {x, y}. Pairs missing from the table bracket
    to zero; a pair given in one order only is completed antisymmetrically.
    """

    def __init__(self, field: FracField, table: Mapping[Tuple[str, str], Any]):
        self.field = field
        self._gens: Dict[str, FracElement] = {str(s): g for s, g in zip(field.symbols, field.gens)}
        self._table: Dict[Tuple[str, str], FracElement] = {}
        for (x, y), value in table.items():
            for name in (x, y):
                if name not in self._gens:
                    raise TowerMismatch(f"{name} is not a variable of {field}")
            value = field.one * value
            if value:
                self._table[(x, y)] = value
        for (x, y), value in list(self._table.items()):
            self._table.setdefault((y, x), -value)

    @property
    def variables(self) -> List[str]:
        return list(self._gens)

    def value(self, x: str, y: str) -> FracElement:
        return self._table.get((x, y), self.field.zero)

    def gradient(self, f: Any) -> Dict[str, FracElement]:
        f = self.field.one * f
        out = {}
        for name, g in self._gens.items():
            d = f.diff(g)
            if d:
                out[name] = d
        return out

    def bracket(self, f: Any, g: Any) -> FracElement:
        return self.contract(self.gradient(f), self.gradient(g))

    def contract(self, df: Mapping[str, Any], dg: Mapping[str, Any]) -> FracElement:
        """The bracket from precomputed gradients."""
        out = self.field.zero
        for x, fx in df.items():
            for y, gy in dg.items():
                c = self._table.get((x, y))
                if c is not None:
                    out += fx * gy * c
        return out

    def jacobiator(self, f: Any, g: Any, h: Any) -> FracElement:
        b = self.bracket
        return b(f, b(g, h)) + b(g, b(h, f)) + b(h, b(f, g))

    def antisymmetry_failures(self) -> List[Tuple[str, str]]:
        return [
            (x, y)
            for (x, y), v in self._table.items()
            if x <= y and v + self._table.get((y, x), self.field.zero)
        ]


class LeibnizBracket(CoordinateBracket):
    """The defining table of P(gl(2)) on one or more tensor copies of k, e"""

    @classmethod
    def from_poisson_table(cls, coords: Sequence[KECoordinates]) -> "LeibnizBracket":
        field = coords[0].field
        table: Dict[Tuple[str, str], Any] = {}
        for c in coords:
            if c.n != 2:
                raise ConfigurationError(
                    "the defining table determines the whole bracket only for n = 2"
                )
            if c.field != field:
                raise TowerMismatch("copies must share one field")
            for (x, y), v in PoissonTable(c).entries().items():
                table[(gen_name(x, c.suffix), gen_name(y, c.suffix))] = v
        return cls(field, table)


def matrix_bracket(bracket: CoordinateBracket, A: LabeledMat, B: LabeledMat) -> LabeledMat:
    """{A (x), B (x)}: entry ((a, c), (b, d)) = {A_ab, B_cd} on the kron carrier."""
    n, m = A.shape[0], B.shape[0]
    ops = FieldOps(bracket.field)
    values = {}
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            x = A.entry(a, b)
            if not x:
                continue
            for c in range(1, m + 1):
                for d in range(1, m + 1):
                    y = B.entry(c, d)
                    if y:
                        values[((a - 1) * m + c, (b - 1) * m + d)] = bracket.bracket(x, y)
    return LabeledMat.from_dict(n * m, n * m, values, ops)


def sklyanin_value(s: LabeledMat, A: LabeledMat, B: LabeledMat, pos: Tuple[int, ...]) -> Any:
    """-[s, A (x) B] at ((a, c), (b, d)), summed directly."""
    a, b, c, d = pos
    n = A.shape[0]

    def idx(i: int, j: int) -> int:
        return (i - 1) * n + j

    out = A.ops.zero()
    for e in range(1, n + 1):
        for f in range(1, n + 1):
            left = s.entry(idx(a, c), idx(e, f))
            if left:
                out += left * A.entry(e, b) * B.entry(f, d)
            right = s.entry(idx(e, f), idx(b, d))
            if right:
                out -= A.entry(a, e) * B.entry(c, f) * right
    return -out


def coordinate_positions(n: int, a: int) -> Dict[str, Position]:
    """Independent coordinates of component a and where they sit in ell+-."""
    out: Dict[str, Position] = {}
    for i in range(1, n + 1):
        out[u_name(i, a)] = (1, i, i)
        for j in range(i + 1, n + 1):
            out[lp_name(i, j, a)] = (1, i, j)
            out[lm_name(j, i, a)] = (-1, j, i)
    return out


class SklyaninBracket(CoordinateBracket):
    """Product of Sklyanin brackets, one per component of a symbolic state"""

    def __init__(self, state: ClassicalState):
        if state.mode != "symbolic" or state.sl:
            raise ConfigurationError("the Sklyanin bracket needs free symbolic coordinates")
        field = state.ops.domain
        self.state = state
        self.s = r_pair(state.n, "block", FieldOps(field))
        table: Dict[Tuple[str, str], Any] = {}
        for a, comp in enumerate(state.components, start=1):
            positions = coordinate_positions(state.n, a)
            for x, px in positions.items():
                for y, py in positions.items():
                    table[(x, y)] = self.formula(comp.get(px[0]), comp.get(py[0]), px, py)
        super().__init__(field, table)

    def formula(self, A: LabeledMat, B: LabeledMat, px: Position, py: Position) -> Any:
        """Bracket of entry px of A (= ell^{sx}) with entry py of B (= ell^{sy})."""
        s = self.s[SIGMA[(px[0], py[0])]]
        return sklyanin_value(s, A, B, (px[1], px[2], py[1], py[2]))

    def component_value(self, a: int, px: Position, py: Position) -> Any:
        comp = self.state.components[a - 1]
        return self.formula(comp.get(px[0]), comp.get(py[0]), px, py)

    # pullback to k, e

    def images(self, coords: KECoordinates, a: int = 1) -> Dict[str, FracElement]:
        """Coordinates of component a as functions of k, e (twisted gauge)."""
        L = classical_L(coords, "twisted")
        return {
            name: L.get(sign).entry(i, j)
            for name, (sign, i, j) in coordinate_positions(self.state.n, a).items()
        }

    def generator_gradients(self, coords: KECoordinates, a: int = 1) -> Dict[Gen, Dict[str, Any]]:
        """d(generator) in the coordinate differentials du, d ell, via p_i = sqrt(u_i)."""
        n = coords.n
        p = coords.prefix

        def dlog_u(k: int) -> Dict[str, Any]:
            return {u_name(k, a): 1 / p(k) ** 2} if k >= 1 else {}

        def combine(*parts: Tuple[Any, Mapping[str, Any]]) -> Dict[str, Any]:
            out: Dict[str, Any] = {}
            for c, grad in parts:
                for name, v in grad.items():
                    out[name] = out.get(name, coords.field.zero) + c * v
            return {k: v for k, v in out.items() if v}

        half = QQ(1, 2)
        grads: Dict[Gen, Dict[str, Any]] = {}
        for l in range(1, n + 1):
            kl = coords.k(l)
            grads[k_gen(l)] = combine((kl * half, dlog_u(l)), (-kl * half, dlog_u(l - 1)))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                eji, eij = coords.e(j, i), coords.e(i, j)
                grads[e_gen(j, i)] = combine(
                    (1 / (p(i) * p(j)), {lp_name(i, j, a): coords.field.one}),
                    (-eji * half, dlog_u(i)),
                    (-eji * half, dlog_u(j)),
                )
                grads[e_gen(i, j)] = combine(
                    (-1 / (p(i - 1) * p(j - 1)), {lm_name(j, i, a): coords.field.one}),
                    (-eij * half, dlog_u(i - 1)),
                    (-eij * half, dlog_u(j - 1)),
                )
        return grads

    def pullback(self, coords: KECoordinates, a: int = 1) -> CoordinateBracket:
        """The bracket of component a carried to the k, e generators of `coords`."""
        ops = FieldOps(coords.field)
        images = self.images(coords, a)
        names = list(images)
        values: Dict[Tuple[str, str], Any] = {}
        for x in names:
            for y in names:
                v = self.value(x, y)
                if v:
                    values[(x, y)] = substitute(v, images, ops)
        grads = self.generator_gradients(coords, a)
        table: Dict[Tuple[str, str], Any] = {}
        gens = generators(coords.n)
        for g in gens:
            for h in gens:
                total = coords.field.zero
                for x, gx in grads[g].items():
                    for y, hy in grads[h].items():
                        v = values.get((x, y))
                        if v is not None:
                            total += gx * hy * v
                table[(gen_name(g, coords.suffix), gen_name(h, coords.suffix))] = total
        logger.debug("sklyanin bracket pulled back", n=coords.n, pairs=len(table))
        return CoordinateBracket(coords.field, table)

    def jacobi_failures(self, names: Iterable[str] = ()) -> List[Tuple[str, str, str]]:
        names = list(names) or self.variables
        gens = self._gens
        return [
            (x, y, z)
            for x, y, z in combinations(names, 3)
            if self.jacobiator(gens[x], gens[y], gens[z])
        ]


def dual_poisson_bracket(a: LabeledMat, b: LabeledMat) -> LabeledMat:
    """{a, b} = [a, b] / 2h for operator images over dual numbers."""
    c = commutator(a, b)
    classical = dual_classical_part(c)
    if not classical.is_zero():
        raise NotQuasiCommutative(
            f"classical part of the commutator is nonzero: {classical.describe()}"
        )
    return dual_h_coefficient(c).scale(QQ(1, 2))
