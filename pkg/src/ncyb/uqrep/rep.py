"""
Finite-dimensional representations of U_q(gl(n))

A Rep stores images of E_ij (i != j) and q^{+-E_kk} together with the integer
weights of its basis vectors, so every Cartan exponential is diagonal with
explicit q-powers.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from sympy.polys.domains import QQ

from ncyb.matrix.labeled import LabeledMat, kron
from ncyb.matrix.ops import DualOps, FieldOps, RationalOps, RingOps
from ncyb.ring.dual import DualNum
from ncyb.ring.tower import gen, q_power, qfield, spectral_field
from ncyb.utils.exceptions import WeightError

COPRODUCTS = ("delta", "delta_op", "delta_F", "delta_F_op")


@dataclass(frozen=True)
class ScalarTower:
    """Scalars the quantum images live in, with q realized inside them"""

    name: str
    ops: RingOps

    def q_pow(self, m: int):
        if self.name == "dual":
            return DualNum(QQ.one, QQ(m))
        return q_power(m, self.ops.domain)

    def scalar(self, x):
        return self.ops.convert(x)

    def var(self, name: str):
        if self.name != "spectral":
            raise WeightError(f"tower {self.name!r} has no variable {name!r}")
        return gen(self.ops.domain, name)


def q_tower() -> ScalarTower:
    return ScalarTower("q", FieldOps(qfield()))


def spectral_tower() -> ScalarTower:
    """q, lam, mu as commuting indeterminates."""
    return ScalarTower("spectral", FieldOps(spectral_field()))


def dual_tower() -> ScalarTower:
    """q = 1 + h with h**2 = 0."""
    return ScalarTower("dual", DualOps(RationalOps()))


@dataclass(frozen=True, order=True)
class GenId:
    """E_ij (kind "E"), q^{E_kk} ("Kplus") or q^{-E_kk} ("Kminus")"""

    kind: str
    i: int
    j: int = 0

    @classmethod
    def E(cls, i: int, j: int) -> "GenId":
        return cls("E", i, j)

    @classmethod
    def Kplus(cls, k: int) -> "GenId":
        return cls("Kplus", k, k)

    @classmethod
    def Kminus(cls, k: int) -> "GenId":
        return cls("Kminus", k, k)

    @property
    def is_simple(self) -> bool:
        return self.kind != "E" or abs(self.i - self.j) == 1

    def __str__(self) -> str:
        if self.kind == "E":
            return f"E{self.i}{self.j}"
        sign = "" if self.kind == "Kplus" else "-"
        return f"q^({sign}E{self.i}{self.i})"


@dataclass(frozen=True)
class Rep:
    """Generator images of one representation on a dim-dimensional carrier"""

    n: int
    dim: int
    images: Mapping[GenId, LabeledMat]
    weights: Tuple[Tuple[int, ...], ...]
    tower: ScalarTower
    label: str = "rep"

    @property
    def ops(self) -> RingOps:
        return self.tower.ops

    def identity(self) -> LabeledMat:
        return LabeledMat.identity(self.dim, self.ops)

    def zero(self) -> LabeledMat:
        return LabeledMat.zeros(self.dim, self.dim, self.ops)

    def E(self, i: int, j: int) -> LabeledMat:
        return self.images[GenId.E(i, j)]

    def K(self, k: int, sign: int = 1) -> LabeledMat:
        return self.images[GenId.Kplus(k) if sign > 0 else GenId.Kminus(k)]

    def cartan(self, k: int) -> LabeledMat:
        """E_kk as the diagonal of weights."""
        return LabeledMat.diag([self.ops.convert(w[k - 1]) for w in self.weights], self.ops)

    def q_cartan(self, coeffs: Sequence[int], scale: int = 1) -> LabeledMat:
        """q^{scale * sum_k coeffs[k-1] E_kk}"""
        return LabeledMat.diag(
            [self.tower.q_pow(scale * sum(c * x for c, x in zip(coeffs, w))) for w in self.weights],
            self.ops,
        )

    def q_omega(self, i: int, scale: int = 1) -> LabeledMat:
        """q^{scale * omega_i}, omega_i = E_11 + ... + E_ii."""
        return self.q_cartan([1 if k < i else 0 for k in range(self.n)], scale)

    def H(self, i: int, power: int = 1) -> LabeledMat:
        """q^{power (E_ii - E_{i+1,i+1})}"""
        coeffs = [0] * self.n
        coeffs[i - 1], coeffs[i] = power, -power
        return self.q_cartan(coeffs)

    def generators(self, simple_only: bool = False) -> Iterable[GenId]:
        for g in sorted(self.images):
            if simple_only and not g.is_simple:
                continue
            yield g


def _validate_weights(weights: Sequence[Sequence[int]], n: int) -> Tuple[Tuple[int, ...], ...]:
    out = []
    for w in weights:
        if len(w) != n or any(not isinstance(x, int) for x in w):
            raise WeightError(f"weight {w!r} is not an integer vector of length {n}")
        out.append(tuple(w))
    return tuple(out)


def _cartan_images(n: int, weights, tower: ScalarTower) -> Dict[GenId, LabeledMat]:
    images = {}
    for k in range(1, n + 1):
        for sign, gid in ((1, GenId.Kplus(k)), (-1, GenId.Kminus(k))):
            powers = [tower.q_pow(sign * w[k - 1]) for w in weights]
            images[gid] = LabeledMat.diag(powers, tower.ops)
    return images


def make_rep(
    n: int,
    simple_images: Mapping[GenId, LabeledMat],
    weights: Sequence[Sequence[int]],
    tower: ScalarTower,
    label: str = "rep",
) -> Rep:
    """Rep from simple-generator images; composite root vectors are filled in."""
    from ncyb.uqrep.roots import root_vector_images

    weights = _validate_weights(weights, n)
    images: Dict[GenId, LabeledMat] = dict(_cartan_images(n, weights, tower))
    images.update(simple_images)
    rep = Rep(n, len(weights), images, weights, tower, label)
    images.update(root_vector_images(rep))
    return Rep(n, len(weights), images, weights, tower, label)


def fundamental_rep(n: int, tower: Optional[ScalarTower] = None) -> Rep:
    """pi(E_kk) = E_kk, pi(E_ij) = (q - q^-1) E_ij."""
    if n < 2:
        raise WeightError("rank n must be at least 2")
    tower = tower or q_tower()
    ops = tower.ops
    c = tower.q_pow(1) - tower.q_pow(-1)
    simple = {}
    for i in range(1, n):
        simple[GenId.E(i, i + 1)] = LabeledMat.unit(n, i, i + 1, ops, c)
        simple[GenId.E(i + 1, i)] = LabeledMat.unit(n, i + 1, i, ops, c)
    weights = [tuple(1 if k == b else 0 for k in range(n)) for b in range(n)]
    return make_rep(n, simple, weights, tower, label="fund")


def counit_rep(n: int, tower: Optional[ScalarTower] = None) -> Rep:
    """One-dimensional rep: E_ij -> 0, q^{E_kk} -> 1."""
    tower = tower or q_tower()
    zero = LabeledMat.zeros(1, 1, tower.ops)
    simple = {}
    for i in range(1, n):
        simple[GenId.E(i, i + 1)] = zero
        simple[GenId.E(i + 1, i)] = zero
    return make_rep(n, simple, [tuple([0] * n)], tower, label="counit")


def _same_rank(r1: Rep, r2: Rep) -> None:
    if r1.n != r2.n:
        raise WeightError(f"ranks differ: {r1.n} vs {r2.n}")
    if r1.tower != r2.tower:
        raise WeightError("representations over different scalar towers")


def coproduct_rep(r1: Rep, r2: Rep, variant: str = "delta") -> Rep:
    """(r1 (x) r2) composed with the chosen coproduct, on the kron carrier."""
    if variant not in COPRODUCTS:
        raise ValueError(f"unknown coproduct {variant!r}")
    _same_rank(r1, r2)
    n = r1.n
    I1, I2 = r1.identity(), r2.identity()
    simple: Dict[GenId, LabeledMat] = {}
    for i in range(1, n):
        up, down = GenId.E(i, i + 1), GenId.E(i + 1, i)
        if variant == "delta":
            # E (x) H_i + 1 (x) E ;  E (x) 1 + H_i^-1 (x) E
            simple[up] = kron(r1.images[up], r2.H(i)) + kron(I1, r2.images[up])
            simple[down] = kron(r1.images[down], I2) + kron(r1.H(i, -1), r2.images[down])
        elif variant == "delta_op":
            simple[up] = kron(r1.H(i), r2.images[up]) + kron(r1.images[up], I2)
            simple[down] = kron(I1, r2.images[down]) + kron(r1.images[down], r2.H(i, -1))
        elif variant == "delta_F":
            # E (x) q^{E_ii} + q^{-E_ii} (x) E ;  E (x) q^{-E_{i+1}} + q^{E_{i+1}} (x) E
            simple[up] = kron(r1.images[up], r2.K(i)) + kron(r1.K(i, -1), r2.images[up])
            simple[down] = kron(r1.images[down], r2.K(i + 1, -1)) + kron(
                r1.K(i + 1), r2.images[down]
            )
        else:
            simple[up] = kron(r1.K(i), r2.images[up]) + kron(r1.images[up], r2.K(i, -1))
            simple[down] = kron(r1.K(i + 1, -1), r2.images[down]) + kron(
                r1.images[down], r2.K(i + 1)
            )
    weights = [
        tuple(a + b for a, b in zip(w1, w2)) for w1 in r1.weights for w2 in r2.weights
    ]
    return make_rep(n, simple, weights, r1.tower, label=f"{variant}({r1.label},{r2.label})")


def dual_rep(r: Rep) -> Rep:
    """pi*(a) = pi(S(a))^T, a representation because S and ^T both reverse products."""
    from ncyb.uqrep.hopf import antipode_images

    S = antipode_images(r)
    simple = {g: S[g].transpose() for g in r.images if g.kind == "E" and g.is_simple}
    weights = [tuple(-x for x in w) for w in r.weights]
    return make_rep(r.n, simple, weights, r.tower, label=f"dual({r.label})")


def tensor_power(r: Rep, k: int, variant: str = "delta") -> Rep:
    out = r
    for _ in range(k - 1):
        out = coproduct_rep(out, r, variant)
    return out
