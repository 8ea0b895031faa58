"""
Exact verification of the U_q(gl(n)) identities in fundamental-built representations
"""

from typing import List, Optional, Sequence

from ncyb.config import get_settings
from ncyb.core.report import Check, CheckList, compare, failed, passed
from ncyb.matrix.inverse import field_inverse
from ncyb.matrix.labeled import (
    LabeledMat,
    commutator,
    embed_operator,
    mat_mul,
    mat_product,
    partial_transpose,
)
from ncyb.uqrep.hopf import antipode_images
from ncyb.uqrep.loperators import L_from_universal, LPair, build_L_operators, lift_aux
from ncyb.uqrep.rep import (
    GenId,
    Rep,
    counit_rep,
    coproduct_rep,
    dual_rep,
    fundamental_rep,
    q_tower,
    spectral_tower,
)
from ncyb.uqrep.rmatrix import (
    exp_factors,
    numeric_R,
    ordered_pairs,
    q_exponential,
    twist_image,
    twisted_from_plain,
    universal_R_image,
)
from ncyb.uqrep.roots import root_vector
from ncyb.utils.exceptions import ConfigurationError, NotNilpotent
from ncyb.utils.logging import setup_logger

logger = setup_logger(__name__)

ALGEBRA_SUITES = (
    "relations",
    "roots",
    "hopf",
    "qexp",
    "universal",
    "yang_baxter",
    "L_operators",
    "frt",
    "spectral",
    "coproduct_L",
    "numeric",
)

# coproduct and R-matrix names per gauge
GAUGE_NAMES = {
    "plain": {
        "delta": "delta",
        "delta_op": "delta_op",
        "R": "R",
        "Rstar": "Rstar",
        "numeric": "plain",
    },
    "twisted": {
        "delta": "delta_F",
        "delta_op": "delta_F_op",
        "R": "R_twisted",
        "Rstar": "Rstar_twisted",
        "numeric": "block",
    },
}


def _sign(s: int) -> str:
    return "+" if s > 0 else "-"


# defining relations


def relation_checks(r: Rep) -> List[Check]:
    """Defining and Serre relations as exact matrix identities in r."""
    n, tower = r.n, r.tower
    c = tower.q_pow(1) - tower.q_pow(-1)
    qq = tower.q_pow(1) + tower.q_pow(-1)
    zero = r.zero()
    tag = r.label
    checks = CheckList()
    for k in range(1, n + 1):
        checks.eq(
            f"{tag}: q^E{k}{k} q^-E{k}{k} = 1",
            "Cartan inverses",
            mat_mul(r.K(k), r.K(k, -1)),
            r.identity(),
        )
        for g in r.generators():
            if g.kind != "E":
                continue
            weight = (1 if k == g.i else 0) - (1 if k == g.j else 0)
            checks.eq(
                f"{tag}: q^E{k}{k} {g} q^-E{k}{k}",
                "Cartan conjugation",
                mat_product([r.K(k), r.E(g.i, g.j), r.K(k, -1)]),
                r.E(g.i, g.j).scale(tower.q_pow(weight)),
            )
    for i in range(1, n):
        for j in range(1, n):
            rhs = (r.H(i) - r.H(i, -1)).scale(c) if i == j else zero
            checks.eq(
                f"{tag}: [E{i}{i + 1}, E{j + 1}{j}]",
                "defining commutator",
                commutator(r.E(i, i + 1), r.E(j + 1, j)),
                rhs,
            )
            if abs(i - j) >= 2:
                up = commutator(r.E(i, i + 1), r.E(j, j + 1))
                down = commutator(r.E(i + 1, i), r.E(j + 1, j))
                checks.eq(f"{tag}: [E{i}{i + 1}, E{j}{j + 1}]", "distant generators", up, zero)
                checks.eq(f"{tag}: [E{i + 1}{i}, E{j + 1}{j}]", "distant generators", down, zero)
            if abs(i - j) == 1:
                pairs = (
                    (r.E(i, i + 1), r.E(j, j + 1), f"E{i}{i + 1}, E{j}{j + 1}"),
                    (r.E(i + 1, i), r.E(j + 1, j), f"E{i + 1}{i}, E{j + 1}{j}"),
                )
                for a, b, label in pairs:
                    serre = (
                        mat_product([a, a, b])
                        - mat_product([a, b, a]).scale(qq)
                        + mat_product([b, a, a])
                    )
                    checks.eq(f"{tag}: Serre({label})", "Serre relation", serre, zero)
    return checks


def root_checks(r: Rep) -> List[Check]:
    """Every admissible intermediate index gives the same composite root vector."""
    checks = CheckList()
    for g in r.generators():
        if g.kind != "E" or g.is_simple:
            continue
        for k in range(min(g.i, g.j) + 1, max(g.i, g.j)):
            checks.eq(
                f"{r.label}: {g} via k={k}",
                "root vector independent of k",
                root_vector(r, r.images, g.i, g.j, k),
                r.E(g.i, g.j),
            )
    return checks


# Hopf structure


def hopf_checks(pi: Rep) -> List[Check]:
    n = pi.n
    checks = CheckList()
    S = antipode_images(pi)
    for k in range(1, n + 1):
        checks.eq(f"S(q^E{k}{k})", "antipode on Cartan", S[GenId.Kplus(k)], pi.K(k, -1))
    eps = counit_rep(n, pi.tower)
    for i in range(1, n):
        checks.eq(f"eps(H{i}) = 1", "counit of H", eps.H(i), eps.identity())

    # (S x S) Delta = Delta' S, read through the dual representation
    rho_op = coproduct_rep(pi, pi, "delta_op")
    S_rho = antipode_images(rho_op)
    pi_star = dual_rep(pi)
    dual_delta = coproduct_rep(pi_star, pi_star, "delta")
    for g in rho_op.generators(simple_only=True):
        checks.eq(
            f"(S x S)Delta({g}) = Delta'S({g})",
            "antipode and coproduct",
            S_rho[g],
            dual_delta.images[g].transpose(),
        )
    checks.extend(relation_checks(pi_star))

    for variant in ("delta", "delta_op", "delta_F", "delta_F_op"):
        left = coproduct_rep(eps, pi, variant)
        right = coproduct_rep(pi, eps, variant)
        a = coproduct_rep(coproduct_rep(pi, pi, variant), pi, variant)
        b = coproduct_rep(pi, coproduct_rep(pi, pi, variant), variant)
        for g in pi.generators(simple_only=True):
            checks.eq(f"(eps x 1){variant}({g})", "counit axiom", left.images[g], pi.images[g])
            checks.eq(f"(1 x eps){variant}({g})", "counit axiom", right.images[g], pi.images[g])
            checks.eq(
                f"{variant} coassociative on {g}", "coassociativity", a.images[g], b.images[g]
            )
        checks.extend(relation_checks(coproduct_rep(pi, pi, variant)))
    return checks


def qexp_checks(pi: Rep) -> List[Check]:
    tower = pi.tower
    checks = CheckList()
    for starred in (False, True):
        base = 2 if starred else -2
        pairs = ordered_pairs(pi.n, reverse=starred)
        for (i, j), factor in zip(pairs, exp_factors(pi, pi, starred)):
            one = LabeledMat.identity(factor.shape[0], pi.ops)
            X = factor - one
            checks.eq(
                f"exp_q^{base}(X) exp_q^{-base}(-X) = 1, pair ({i},{j})",
                "q-exponential inverse",
                mat_mul(q_exponential(X, base, tower), q_exponential(-X, -base, tower)),
                one,
            )
    name = "exp_q(1) rejected as not nilpotent"
    try:
        q_exponential(pi.identity(), 2, tower)
        checks.append(failed(name, "q-exponential nilpotency"))
    except NotNilpotent:
        checks.append(passed(name, "q-exponential nilpotency"))
    return checks


# universal R


def swap_factors(X: LabeledMat, d1: int, d2: int) -> LabeledMat:
    """X_21 for X acting on a d1 (x) d2 carrier."""
    return embed_operator(X, (1, 0), [d2, d1])


def universal_checks(pi: Rep, gauge: str) -> List[Check]:
    names = GAUGE_NAMES[gauge]
    n, dim = pi.n, pi.dim
    checks = CheckList()
    R = universal_R_image(pi, pi, names["R"])
    Rs = universal_R_image(pi, pi, names["Rstar"])
    num = numeric_R(n, names["numeric"], pi.tower)
    anchor = "R-matrix in the fundamental representation"
    checks.eq(f"{gauge}: (pi x pi) R = R+", anchor, R, num.plus)
    checks.eq(f"{gauge}: (pi x pi) R* = R-", anchor, Rs, num.minus)

    R21_inv = field_inverse(swap_factors(R, dim, dim))
    if gauge == "plain":
        checks.eq("plain: R*_12 = (R_21)^-1", "starred universal R", Rs, R21_inv)
    else:
        cc2 = twist_image(pi, pi, "cc", power=2)
        checks.eq(
            "twisted: R*_12 = (R_21)^-1 q^{2 c (x) c}",
            "starred universal R",
            Rs,
            mat_mul(R21_inv, cc2),
        )
        anchor = "twisted universal R"
        checks.eq("twisted: F21 R F12^-1 q^{c c} = R", anchor, twisted_from_plain(pi, pi), R)
        checks.eq(
            "twisted: F21 R* F12^-1 q^{c c} = R*",
            anchor,
            twisted_from_plain(pi, pi, starred=True),
            Rs,
        )

    d = coproduct_rep(pi, pi, names["delta"])
    dop = coproduct_rep(pi, pi, names["delta_op"])
    for kind, M in (("R", R), ("R*", Rs)):
        for g in d.generators():
            checks.eq(
                f"{gauge}: Delta'({g}) {kind} = {kind} Delta({g})",
                "intertwining property",
                mat_mul(dop.images[g], M),
                mat_mul(M, d.images[g]),
            )

    dims3 = [dim, dim, dim]
    R13, R23, R12 = (embed_operator(R, p, dims3) for p in ((0, 2), (1, 2), (0, 1)))
    anchor = "quasitriangularity"
    checks.eq(
        f"{gauge}: (Delta x 1) R = R13 R23",
        anchor,
        universal_R_image(d, pi, names["R"]),
        mat_mul(R13, R23),
    )
    checks.eq(
        f"{gauge}: (1 x Delta) R = R13 R12",
        anchor,
        universal_R_image(pi, d, names["R"]),
        mat_mul(R13, R12),
    )
    if gauge == "plain":
        eps = counit_rep(n, pi.tower)
        checks.eq("(eps x 1) R = 1", "counit of R", universal_R_image(eps, pi), pi.identity())
        checks.eq("(1 x eps) R = 1", "counit of R", universal_R_image(pi, eps), pi.identity())
        pi_star = dual_rep(pi)
        # pi(S a) = pi*(a)^T, so S on a factor is a partial transpose of the dual image
        S1 = partial_transpose(universal_R_image(pi_star, pi), [dim, dim], 0)
        SS = universal_R_image(pi_star, pi_star).transpose()
        checks.eq("(S x 1) R = R^-1", "antipode of R", S1, field_inverse(R))
        checks.eq("(S x S) R = R", "antipode invariance of R", SS, R)
    return checks


YBE_TRIPLES = (
    ("R", "R", "R"),
    ("R", "R", "R*"),
    ("R*", "R", "R"),
    ("R*", "R*", "R"),
    ("R", "R*", "R*"),
    ("R*", "R*", "R*"),
)


def yang_baxter_checks(pi: Rep, gauge: str) -> List[Check]:
    names = GAUGE_NAMES[gauge]
    mats = {
        "R": universal_R_image(pi, pi, names["R"]),
        "R*": universal_R_image(pi, pi, names["Rstar"]),
    }
    dims3 = [pi.dim] * 3
    checks = CheckList()
    for a, b, c in YBE_TRIPLES:
        A12 = embed_operator(mats[a], (0, 1), dims3)
        B13 = embed_operator(mats[b], (0, 2), dims3)
        C23 = embed_operator(mats[c], (1, 2), dims3)
        checks.eq(
            f"{gauge}: {a}12 {b}13 {c}23 = {c}23 {b}13 {a}12",
            "Yang-Baxter equation",
            mat_product([A12, B13, C23]),
            mat_product([C23, B13, A12]),
        )
    return checks


# L-operators


def quantum_space(pi: Rep, gauge: str) -> Rep:
    """Carrier the L-operator entries act on: pi (x) pi for n = 2, pi otherwise."""
    if pi.n <= 2:
        return coproduct_rep(pi, pi, GAUGE_NAMES[gauge]["delta"])
    return pi


def triangularity_check(L: LPair) -> Check:
    name = f"{L.gauge} L+ upper and L- lower triangular on {L.rep.label}"
    for i in range(1, L.n + 1):
        for j in range(1, L.n + 1):
            if i > j and not L.Lplus.entry(i, j).is_zero():
                return failed(name, "L-operator shape", {"row": str(i), "col": str(j), "L": "+"})
            if i < j and not L.Lminus.entry(i, j).is_zero():
                return failed(name, "L-operator shape", {"row": str(i), "col": str(j), "L": "-"})
    return passed(name, "L-operator shape")


def L_operator_checks(pi: Rep, gauge: str) -> List[Check]:
    checks = CheckList()
    for W in (pi, coproduct_rep(pi, pi, GAUGE_NAMES[gauge]["delta"])):
        direct = build_L_operators(W, gauge)
        via_R = L_from_universal(pi, W, gauge)
        for sign in (1, -1):
            checks.eq(
                f"{gauge} L{_sign(sign)} on {W.label}: (pi x 1) R = direct",
                "L-operators from the universal R",
                via_R.flat(sign),
                direct.flat(sign),
            )
        checks.append(triangularity_check(direct))
    return checks


# (e, a, b, c, d):  Rc^e L^a_13 L^b_23 = L^c_13 L^d_23 Rc^e
FRT_RELATIONS = (
    (1, -1, -1, -1, -1),
    (-1, -1, -1, -1, -1),
    (1, 1, 1, 1, 1),
    (-1, 1, 1, 1, 1),
    (1, 1, -1, -1, 1),
    (-1, -1, 1, 1, -1),
)


def frt_checks(pi: Rep, gauge: str) -> List[Check]:
    W = quantum_space(pi, gauge)
    L = build_L_operators(W, gauge)
    num = numeric_R(pi.n, GAUGE_NAMES[gauge]["numeric"], pi.tower)
    dims = [pi.n, pi.n, W.dim]
    checks = CheckList()
    for e, a, b, c, d in FRT_RELATIONS:
        Rc = embed_operator(num.braided(e), (0, 1), dims)
        s = [_sign(x) for x in (e, a, b, c, d)]
        checks.eq(
            f"{gauge}: Rc{s[0]} L{s[1]}13 L{s[2]}23 = L{s[3]}13 L{s[4]}23 Rc{s[0]}",
            "RLL relations",
            mat_product([Rc, L.lifted(a, 0), L.lifted(b, 1)]),
            mat_product([L.lifted(c, 0), L.lifted(d, 1), Rc]),
        )
    return checks


def spectral_checks(n: int, gauge: str) -> List[Check]:
    tower = spectral_tower()
    pi = fundamental_rep(n, tower)
    W = quantum_space(pi, gauge)
    L = build_L_operators(W, gauge)
    num = numeric_R(n, GAUGE_NAMES[gauge]["numeric"], tower)
    lam, mu = tower.var("lam"), tower.var("mu")
    Rc = embed_operator(num.braided_spectral(lam / mu), (0, 1), [n, n, W.dim])

    def L_at(x, slot: int) -> LabeledMat:
        return lift_aux(L.spectral(x), n, W.dim, slot)

    return [
        compare(
            f"{gauge}: Rc(lam/mu) L13(lam) L23(mu) = L13(mu) L23(lam) Rc(lam/mu)",
            "spectral Yang-Baxter equation",
            mat_product([Rc, L_at(lam, 0), L_at(mu, 1)]),
            mat_product([L_at(mu, 0), L_at(lam, 1), Rc]),
        )
    ]


def coproduct_L_checks(pi: Rep, gauge: str) -> List[Check]:
    """L on pi (x) pi through the coproduct equals L13 L12."""
    n = pi.n
    W = coproduct_rep(pi, pi, GAUGE_NAMES[gauge]["delta"])
    L, L1 = build_L_operators(W, gauge), build_L_operators(pi, gauge)
    dims = [n, pi.dim, pi.dim]
    checks = CheckList()
    for sign in (1, -1):
        L13 = embed_operator(L1.flat(sign), (0, 2), dims)
        L12 = embed_operator(L1.flat(sign), (0, 1), dims)
        label = f"L{_sign(sign)}"
        checks.eq(
            f"{gauge}: (1 x Delta) {label} = {label}13 {label}12",
            "coproduct of L-operators",
            L.flat(sign),
            mat_mul(L13, L12),
        )
    return checks


def numeric_checks(n: int) -> List[Check]:
    tower = q_tower()
    ops = tower.ops
    checks = CheckList()
    for variant in ("plain", "block"):
        num = numeric_R(n, variant, tower)
        c = num.at_one_coefficient()
        checks.eq(
            f"{variant}: R(1) = c P", "special value of R", num.spectral(ops.one()), num.P.scale(c)
        )
        checks.eq(
            f"{variant}: Rc+ - Rc- = c 1",
            "braided R difference",
            num.braided(1) - num.braided(-1),
            LabeledMat.identity(n * n, ops).scale(c),
        )
    return checks


def verify_algebra_relations(
    n: int, gauge: str = "both", suites: Optional[Sequence[str]] = None
) -> List[Check]:
    """Evaluate the requested groups of algebra identities exactly."""
    bound = get_settings().quantum_max_n
    if n > bound:
        raise ConfigurationError(f"n={n} exceeds the quantum bound {bound}")
    gauges = ("plain", "twisted") if gauge == "both" else (gauge,)
    suites = tuple(suites) if suites else ALGEBRA_SUITES
    unknown = set(suites) - set(ALGEBRA_SUITES)
    if unknown:
        raise ConfigurationError(f"unknown algebra suites: {sorted(unknown)}")

    pi = fundamental_rep(n)
    checks: List[Check] = []
    if "relations" in suites:
        checks.extend(relation_checks(pi))
    if "roots" in suites:
        checks.extend(root_checks(pi))
        checks.extend(root_checks(coproduct_rep(pi, pi, "delta")))
    if "hopf" in suites:
        checks.extend(hopf_checks(pi))
    if "qexp" in suites:
        checks.extend(qexp_checks(pi))
    if "numeric" in suites:
        checks.extend(numeric_checks(n))
    per_gauge = (
        ("universal", universal_checks),
        ("yang_baxter", yang_baxter_checks),
        ("L_operators", L_operator_checks),
        ("frt", frt_checks),
        ("coproduct_L", coproduct_L_checks),
    )
    for g in gauges:
        for suite, fn in per_gauge:
            if suite in suites:
                checks.extend(fn(pi, g))
        if "spectral" in suites:
            checks.extend(spectral_checks(n, g))
    logger.info("algebra relations evaluated", n=n, gauge=gauge, checks=len(checks))
    return checks
