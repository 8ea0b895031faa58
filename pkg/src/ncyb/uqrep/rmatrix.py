"""
Universal R-matrix images, q-exponentials and closed-form R-matrices

Ordered products run over pairs (i, j), i < j, in reverse-lexicographic
order: (i1, j1) precedes (i2, j2) iff i1 > i2, or i1 == i2 and j1 > j2.
"""

from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Sequence, Tuple

from ncyb.matrix.labeled import LabeledMat, kron, mat_mul, mat_product, permutation_matrix
from ncyb.uqrep.rep import Rep, ScalarTower, q_tower, spectral_tower
from ncyb.utils.exceptions import NotNilpotent, WeightError
from ncyb.utils.logging import setup_logger

logger = setup_logger(__name__)

R_KINDS = ("R", "Rstar", "R_twisted", "Rstar_twisted")
TWISTS = ("F12", "F21", "cc")


def ordered_pairs(n: int, reverse: bool = False) -> List[Tuple[int, int]]:
    """Pairs i < j in reverse-lexicographic order, or its mirror."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    pairs.sort(key=lambda p: (-p[0], -p[1]))
    return list(reversed(pairs)) if reverse else pairs


def q_factorial_base(k: int, base: int, tower: ScalarTower) -> Any:
    """(k)_p! with p = q^base and (m)_p = 1 + p + ... + p^(m-1)."""
    out = tower.ops.one()
    for m in range(1, k + 1):
        acc = tower.ops.zero()
        for t in range(m):
            acc = acc + tower.q_pow(base * t)
        out = out * acc
    return out


def q_exponential(
    X: LabeledMat, base: int, tower: ScalarTower, max_pow: Optional[int] = None
) -> LabeledMat:
    """exp_p(X) = sum_k X^k / (k)_p!, p = q^base, for nilpotent X."""
    dim = X.shape[0]
    max_pow = max_pow if max_pow is not None else dim + 1
    ops = X.ops
    out = LabeledMat.identity(dim, ops)
    power = out
    for k in range(1, max_pow + 1):
        power = mat_mul(power, X)
        if power.is_zero():
            return out
        out = out + power.scale(ops.try_invert(q_factorial_base(k, base, tower)))
    raise NotNilpotent(f"X^{max_pow} is not zero")


def _check_weights(r1: Rep, r2: Rep) -> None:
    for r in (r1, r2):
        for w in r.weights:
            if any(not isinstance(x, int) for x in w):
                raise WeightError(f"non-integer weight {w!r} in {r.label}")
    if r1.tower != r2.tower or r1.n != r2.n:
        raise WeightError("representations are not compatible")


Pairing = Callable[[Sequence[int], Sequence[int]], int]


def cartan_exponential(r1: Rep, r2: Rep, exponent: Pairing) -> LabeledMat:
    """Diagonal q^{exponent(wa, wb)} on the tensor basis e_a (x) e_b."""
    _check_weights(r1, r2)
    tower = r1.tower
    return LabeledMat.diag(
        [tower.q_pow(exponent(wa, wb)) for wa in r1.weights for wb in r2.weights], tower.ops
    )


def _prefix(w: Sequence[int], i: int) -> int:
    """omega_i evaluated on weight w."""
    return sum(w[:i])


def _diag_pairing(wa, wb) -> int:
    return sum(a * b for a, b in zip(wa, wb))


def _omega_pairing(wa, wb) -> int:
    # sum_i E_ii (x) omega_i
    return sum(wa[i - 1] * _prefix(wb, i) for i in range(1, len(wa) + 1))


def _omega_prev_pairing(wa, wb) -> int:
    # sum_i E_ii (x) omega_{i-1}
    return sum(wa[i - 1] * _prefix(wb, i - 1) for i in range(1, len(wa) + 1))


def twist_image(r1: Rep, r2: Rep, which: str, power: int = 1) -> LabeledMat:
    """F12 = q^{sum omega_{i-1} (x) E_ii}, F21 = q^{sum E_ii (x) omega_{i-1}}, cc = q^{c (x) c}."""
    if which not in TWISTS:
        raise ValueError(f"unknown twist {which!r}")

    def exponent(wa, wb) -> int:
        if which == "F12":
            return power * _omega_prev_pairing(wb, wa)
        if which == "F21":
            return power * _omega_prev_pairing(wa, wb)
        return power * sum(wa) * sum(wb)

    return cartan_exponential(r1, r2, exponent)


def exp_factors(r1: Rep, r2: Rep, starred: bool) -> List[LabeledMat]:
    tower = r1.tower
    ops = r1.ops
    inv = ops.try_invert(tower.q_pow(1) - tower.q_pow(-1))
    factors = []
    if not starred:
        # exp_{q^-2}((q - q^-1)^-1 E_ij (x) E_ji)
        for i, j in ordered_pairs(r1.n):
            X = kron(r1.E(i, j), r2.E(j, i)).scale(inv)
            factors.append(q_exponential(X, -2, tower))
    else:
        # exp_{q^2}(-(q - q^-1)^-1 E_ji (x) E_ij), mirrored order
        for i, j in ordered_pairs(r1.n, reverse=True):
            X = kron(r1.E(j, i), r2.E(i, j)).scale(ops.neg(inv))
            factors.append(q_exponential(X, 2, tower))
    return factors


def universal_R_image(r1: Rep, r2: Rep, kind: str = "R") -> LabeledMat:
    """(r1 (x) r2) of the universal R-matrix of the requested kind."""
    if kind not in R_KINDS:
        raise ValueError(f"unknown R-matrix kind {kind!r}")
    _check_weights(r1, r2)
    starred = kind.startswith("Rstar")
    factors = exp_factors(r1, r2, starred)
    if kind == "R":
        left, right = cartan_exponential(r1, r2, _diag_pairing), None
    elif kind == "Rstar":
        left, right = None, cartan_exponential(r1, r2, lambda a, b: -_diag_pairing(a, b))
    elif kind == "R_twisted":
        Q = cartan_exponential(r1, r2, _omega_pairing)
        left, right = Q, Q
    else:
        Q = cartan_exponential(r1, r2, _omega_prev_pairing)
        left, right = Q, Q
    chain = ([left] if left is not None else []) + factors + ([right] if right is not None else [])
    logger.debug("universal R image", kind=kind, factors=len(chain), dim=r1.dim * r2.dim)
    return mat_product(chain)


def twisted_from_plain(r1: Rep, r2: Rep, starred: bool = False) -> LabeledMat:
    """F21 R F12^-1 q^{c (x) c} built from the plain universal R."""
    plain = universal_R_image(r1, r2, "Rstar" if starred else "R")
    return mat_product(
        [
            twist_image(r1, r2, "F21"),
            plain,
            twist_image(r1, r2, "F12", power=-1),
            twist_image(r1, r2, "cc"),
        ]
    )


@dataclass(frozen=True)
class NumericR:
    """Closed-form R^+- on C^n (x) C^n"""

    n: int
    plus: LabeledMat
    minus: LabeledMat
    variant: str
    tower: ScalarTower

    @property
    def P(self) -> LabeledMat:
        return permutation_matrix(self.n, self.tower.ops)

    def spectral(self, x: Any) -> LabeledMat:
        """x R^+ - x^-1 R^-"""
        ops = self.tower.ops
        return self.plus.scale(x) - self.minus.scale(ops.try_invert(x))

    def braided(self, sign: int = 1) -> LabeledMat:
        return mat_mul(self.P, self.plus if sign > 0 else self.minus)

    def braided_spectral(self, x: Any) -> LabeledMat:
        return mat_mul(self.P, self.spectral(x))

    def at_one_coefficient(self) -> Any:
        """R(1) = coefficient * P."""
        q = self.tower.q_pow
        if self.variant == "plain":
            return q(1) - q(-1)
        return q(2) - self.tower.ops.one()


def numeric_R(n: int, variant: str = "plain", tower: Optional[ScalarTower] = None) -> NumericR:
    """R^+- (plain) or the block R-matrices (block), written out entrywise.

    plain: R^+ = sum q^{d_ij} E_ii (x) E_jj + (q - q^-1) sum_{i<j} E_ij (x) E_ji
    block: R^+ = sum q^{2[i>=j]} E_ii (x) E_jj + (q^2 - 1) sum_{i<j} E_ij (x) E_ji
    """
    if variant not in ("plain", "block"):
        raise ValueError(f"unknown R-matrix variant {variant!r}")
    tower = tower or q_tower()
    ops = tower.ops
    q = tower.q_pow

    def pos(i: int, j: int) -> int:
        return (i - 1) * n + j

    plus, minus = {}, {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if variant == "plain":
                plus[(pos(i, j), pos(i, j))] = q(1) if i == j else ops.one()
                minus[(pos(i, j), pos(i, j))] = q(-1) if i == j else ops.one()
            else:
                plus[(pos(i, j), pos(i, j))] = q(2) if i >= j else ops.one()
                minus[(pos(i, j), pos(i, j))] = q(2) if i > j else ops.one()
    c = q(1) - q(-1) if variant == "plain" else q(2) - ops.one()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            # E_ij (x) E_ji sends e_j (x) e_i to e_i (x) e_j
            plus[(pos(i, j), pos(j, i))] = c
            minus[(pos(j, i), pos(i, j))] = ops.neg(c)
    return NumericR(
        n,
        LabeledMat.from_dict(n * n, n * n, plus, ops),
        LabeledMat.from_dict(n * n, n * n, minus, ops),
        variant,
        tower,
    )


def spectral_numeric_R(n: int, variant: str = "plain") -> NumericR:
    """numeric_R over q, lam, mu."""
    return numeric_R(n, variant, spectral_tower())
