"""
Quasi-classical Poisson structures

Checks that the r-matrix bracket, the Sklyanin bracket on ell+-, the defining
table on k, e and the dual-number bracket [a, b] / 2h describe one Poisson
algebra, that the classical map preserves it, and that the classical Hopf
maps are (anti-)Poisson.
"""

from itertools import combinations, combinations_with_replacement
from typing import Any, Dict, List, Tuple

from sympy.polys.domains import QQ

from ncyb.classical.brackets import (
    LeibnizBracket,
    SklyaninBracket,
    coordinate_positions,
    dual_poisson_bracket,
    matrix_bracket,
)
from ncyb.classical.coords import (
    Gen,
    KECoordinates,
    PoissonTable,
    classical_L,
    e_gen,
    gen_name,
    generators,
    k_gen,
    ke_coordinates,
    spectral_L,
)
from ncyb.classical.hopf import (
    COPRODUCTS,
    classical_antipode,
    classical_coproduct,
    classical_counit,
    simple_generators,
)
from ncyb.classical.maps import classical_forward_map
from ncyb.classical.rmatrix import ClassicalR, r_pair, verify_r_matrices
from ncyb.classical.state import symbolic_state
from ncyb.classical.verify import Task, check_classical_limit_consistency
from ncyb.config import get_settings
from ncyb.core.report import Check, CheckList, compare, failed, passed
from ncyb.core.rng import SeedStream
from ncyb.matrix.labeled import LabeledMat, commutator, kron, mat_mul
from ncyb.matrix.ops import DualOps, FieldOps, MatrixOps, RationalOps
from ncyb.ring.dual import DualNum, dual_classical_part, dual_h_coefficient
from ncyb.ring.tower import gen, substitute
from ncyb.uqrep.hopf import antipode_images, counit_images
from ncyb.uqrep.rep import GenId, coproduct_rep, dual_tower, fundamental_rep
from ncyb.utils.exceptions import ConfigurationError, NotQuasiCommutative
from ncyb.utils.logging import setup_logger

logger = setup_logger(__name__)

SKLYANIN = "Sklyanin bracket"
TABLE = "defining Poisson brackets"
HOPF = "classical Hopf structure"
DUAL = "Poisson bracket from the commutator at q = 1 + h"


def _verdict(name: str, anchor: str, failures: List[Any]) -> Check:
    if failures:
        detail = {"count": len(failures), "first": [str(f) for f in failures[:5]]}
        return failed(name, anchor, detail)
    return passed(name, anchor)


def _quantum_gen(g: Gen) -> GenId:
    return GenId.Kplus(g[1]) if g[0] == "k" else GenId.E(g[1], g[2])


# r-matrix form


def rmatrix_poisson_checks() -> List[Check]:
    """{ell(lam) (x), ell(mu) (x)} = lam mu / (mu^2 - lam^2) [r(lam / mu), ell(lam) (x) ell(mu)]

    Runs at n = 2, where the defining table fixes the whole bracket.
    """
    (coords,) = ke_coordinates(2, extra=("lam", "mu"))
    K = coords.field
    lam, mu = gen(K, "lam"), gen(K, "mu")
    bracket = LeibnizBracket.from_poisson_table([coords])
    ops = FieldOps(K)
    checks: List[Check] = []
    for gauge, variant in (("plain", "plain"), ("twisted", "block")):
        comp = classical_L(coords, gauge)
        A, B = spectral_L(comp, lam), spectral_L(comp, mu)
        r = ClassicalR(2, variant, *r_pair(2, variant, ops))
        rhs = commutator(r.spectral(lam / mu), kron(A, B)).scale(lam * mu / (mu**2 - lam**2))
        checks.append(
            compare(
                f"n=2 {gauge}: spectral L-operators satisfy the r-matrix bracket",
                "r-matrix Poisson bracket",
                matrix_bracket(bracket, A, B),
                rhs,
            )
        )
    return checks


# Sklyanin bracket and its pullback


def _well_defined(sk: SklyaninBracket, n: int) -> List[Check]:
    """Brackets respect the shape of ell+-: shared diagonals, ell-_11 = 1, zero corners."""
    positions = list(coordinate_positions(n, 1).items())
    shared, unit, corners = [], [], []
    for name, py in positions:
        for k in range(1, n):
            lhs = sk.component_value(1, (-1, k + 1, k + 1), py)
            if lhs - sk.component_value(1, (1, k, k), py):
                shared.append((k, name))
        if sk.component_value(1, (-1, 1, 1), py):
            unit.append(name)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if sk.component_value(1, (1, j, i), py) or sk.component_value(1, (-1, i, j), py):
                    corners.append((i, j, name))
    tag = f"n={n}: "
    return [
        _verdict(tag + "ell-_{k+1,k+1} and ell+_kk bracket alike", SKLYANIN, shared),
        _verdict(tag + "ell-_11 is a Casimir", SKLYANIN, unit),
        _verdict(tag + "vanishing corners of ell+- stay Casimirs", SKLYANIN, corners),
    ]


def _root_relations(ke, coords: KECoordinates) -> List[Check]:
    """Composite root vectors, Serre relations and extended brackets on k, e."""
    n = coords.n
    e = coords.e
    half, quarter = QQ(1, 2), QQ(1, 4)
    table = PoissonTable(coords)
    checks = CheckList()
    for i in range(1, n - 1):
        a, b, c = i, i + 1, i + 2
        checks.eq(
            f"n={n}: e{a}{c} = {{e{a}{b}, e{b}{c}}} - e{a}{b} e{b}{c} / 2",
            "composite root vectors",
            ke.bracket(e(a, b), e(b, c)) - half * e(a, b) * e(b, c),
            e(a, c),
        )
        checks.eq(
            f"n={n}: e{c}{a} = {{e{c}{b}, e{b}{a}}} + e{b}{a} e{c}{b} / 2",
            "composite root vectors",
            ke.bracket(e(c, b), e(b, a)) + half * e(b, a) * e(c, b),
            e(c, a),
        )
        serre = ((e(a, b), e(b, c)), (e(b, c), e(a, b)), (e(b, a), e(c, b)), (e(c, b), e(b, a)))
        for x, y in serre:
            checks.eq(
                f"n={n}: {{{x}, {{{x}, {y}}}}} = {x}^2 {y} / 4",
                "quasi-classical Serre relations",
                ke.bracket(x, ke.bracket(x, y)),
                quarter * x**2 * y,
            )
        for alpha, beta in (((a, b), (a, c)), ((a, c), (b, c)), ((b, a), (c, a)), ((c, a), (c, b))):
            x, y = e(*alpha), e(*beta)
            checks.eq(
                f"n={n}: {{{x}, {y}}} = -(alpha|beta)/2 {x} {y}",
                "extended brackets of root vectors",
                ke.bracket(x, y),
                -table.extended_sign(alpha, beta) * x * y,
            )
    return checks


def sklyanin_checks(n: int) -> List[Check]:
    """The Sklyanin bracket is Poisson and pulls back to the defining table."""
    state = symbolic_state(n, components=1)
    sk = SklyaninBracket(state)
    tag = f"n={n}: "
    checks: List[Check] = _well_defined(sk, n)
    checks.append(
        _verdict(tag + "Sklyanin bracket is antisymmetric", SKLYANIN, sk.antisymmetry_failures())
    )
    checks.append(
        _verdict(tag + "Sklyanin bracket satisfies Jacobi", SKLYANIN, sk.jacobi_failures())
    )

    (coords,) = ke_coordinates(n)
    ke = sk.pullback(coords)
    table = PoissonTable(coords)
    mismatches = [
        (gen_name(x), gen_name(y))
        for (x, y), v in table.entries().items()
        if ke.value(gen_name(x), gen_name(y)) - v
    ]
    checks.append(
        _verdict(tag + "pullback to k, e reproduces the defining table", TABLE, mismatches)
    )
    weights = [
        (gen_name(k), gen_name(g))
        for k in (k_gen(l) for l in range(1, n + 1))
        for g in generators(n)
        if g[0] == "e" and ke.value(gen_name(k), gen_name(g)) - table.bracket(k, g)
    ]
    checks.append(_verdict(tag + "every e_ij has weight eps_i - eps_j", TABLE, weights))
    checks.extend(_root_relations(ke, coords))
    values = [coords.value(g) for g in generators(n)]
    jacobi = [
        (str(x), str(y), str(z))
        for x, y, z in combinations(values, 3)
        if ke.jacobiator(x, y, z)
    ]
    checks.append(_verdict(tag + "pulled-back bracket satisfies Jacobi", TABLE, jacobi))
    return checks


# the classical map


def poisson_map_checks(n: int = 2) -> List[Check]:
    """Brackets of the image coordinates are again Sklyanin, componentwise."""
    state = symbolic_state(n)
    sk = SklyaninBracket(state)
    tilde = classical_forward_map(state)
    coords: List[Tuple[int, Tuple[int, int, int], Dict[str, Any]]] = []
    for a in (1, 2):
        for px in coordinate_positions(n, a).values():
            value = tilde.L(a, px[0]).entry(px[1], px[2])
            coords.append((a, px, sk.gradient(value)))
    same, cross = [], []
    for (a, px, dx), (b, py, dy) in combinations_with_replacement(coords, 2):
        lhs = sk.contract(dx, dy)
        if a != b:
            if lhs:
                cross.append((a, px, b, py))
            continue
        comp = tilde.components[a - 1]
        if lhs - sk.formula(comp.get(px[0]), comp.get(py[0]), px, py):
            same.append((a, px, py))
    anchor = "Poisson property of the classical map"
    return [
        _verdict(f"n={n}: image components carry the Sklyanin bracket", anchor, same),
        _verdict(f"n={n}: image components Poisson commute", anchor, cross),
    ]


# Hopf maps


def _names(images: Dict[Gen, Any], suffix: str = "") -> Dict[str, Any]:
    return {gen_name(g, suffix): v for g, v in images.items()}


def hopf_poisson_checks(n: int = 2) -> List[Check]:
    """Coproducts are Poisson, the antipode anti-Poisson, and the Hopf axioms hold."""
    first, second = ke_coordinates(n, copies=2)
    (single,) = ke_coordinates(n)
    K2, K1 = first.field, single.field
    table = PoissonTable(single)
    gens = simple_generators(n)
    order = {g: idx for idx, g in enumerate(gens)}
    pairs = [(x, y) for x, y in table.entries() if order[x] < order[y]]
    checks: List[Check] = []
    if n == 2:
        product = LeibnizBracket.from_poisson_table([first, second])
        one_copy = LeibnizBracket.from_poisson_table([single])
        for variant in COPRODUCTS:
            D = classical_coproduct(first, second, variant)
            bad = [
                (gen_name(x), gen_name(y))
                for x, y in pairs
                if product.bracket(D[x], D[y])
                - substitute(table.bracket(x, y), _names(D), FieldOps(K2))
            ]
            checks.append(_verdict(f"n={n}: {variant} is a Poisson map", HOPF, bad))
        S = classical_antipode(single)
        bad = [
            (gen_name(x), gen_name(y))
            for x, y in pairs
            if one_copy.bracket(S[x], S[y])
            + substitute(table.bracket(x, y), _names(S), FieldOps(K1))
        ]
        checks.append(_verdict(f"n={n}: antipode is anti-Poisson", HOPF, bad))
    eps = classical_counit(n)
    bad = [
        (gen_name(x), gen_name(y))
        for x, y in pairs
        if substitute(table.bracket(x, y), _names(eps), FieldOps(QQ))
    ]
    checks.append(_verdict(f"n={n}: counit kills brackets", HOPF, bad))
    checks.extend(_hopf_axioms(first, second, single))
    return checks


def _hopf_axioms(first: KECoordinates, second: KECoordinates, single: KECoordinates) -> List[Check]:
    n = single.n
    K2, K1 = FieldOps(first.field), FieldOps(single.field)
    D = classical_coproduct(first, second, "delta")
    D_op = classical_coproduct(second, first, "delta")
    S, S1, S2 = (classical_antipode(c) for c in (single, first, second))
    eps = classical_counit(n)
    identity = single.values()
    both_S = {**_names(S1, first.suffix), **_names(S2, second.suffix)}
    checks = CheckList()
    for g in simple_generators(n):
        name = gen_name(g)
        checks.eq(
            f"n={n}: (S (x) S) D({name}) = D'(S({name}))",
            HOPF,
            substitute(D[g], both_S, K2),
            substitute(S[g], _names(D_op), K2),
        )
        left = {**_names(S, first.suffix), **_names(identity, second.suffix)}
        right = {**_names(identity, first.suffix), **_names(S, second.suffix)}
        for label, images in (("m(S (x) id)", left), ("m(id (x) S)", right)):
            checks.eq(
                f"n={n}: {label} D({name}) = eps({name})",
                HOPF,
                substitute(D[g], images, K1),
                K1.convert(eps[g]),
            )
        for label, images in (
            ("(eps (x) id)", {**_names(eps, first.suffix), **_names(identity, second.suffix)}),
            ("(id (x) eps)", {**_names(identity, first.suffix), **_names(eps, second.suffix)}),
        ):
            checks.eq(
                f"n={n}: {label} D({name}) = {name}",
                HOPF,
                substitute(D[g], images, K1),
                identity[g],
            )
        checks.eq(
            f"n={n}: eps(S({name})) = eps({name})",
            HOPF,
            substitute(S[g], _names(eps), FieldOps(QQ)),
            QQ(eps[g]),
        )
    return checks


# dual-number realization


def _dual_matrix(classical: LabeledMat, h_part: LabeledMat) -> LabeledMat:
    n = classical.shape[0]
    values = {
        (i, j): DualNum(classical.entry(i, j), h_part.entry(i, j))
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    }
    return LabeledMat.from_dict(n, n, values, DualOps(RationalOps()))


def _random_operator(n: int, stream: SeedStream) -> LabeledMat:
    """Diagonal classical part, so any two of them are quasi-commutative."""
    base = RationalOps()
    return _dual_matrix(LabeledMat.diag(stream.rationals(n), base), stream.matrix(n, n, base))


def dual_bracket_checks(n: int, seed: int = 0) -> List[Check]:
    """Antisymmetry, bilinearity and Leibniz rule of [a, b] / 2h on random operators."""
    stream = SeedStream(seed, "dual-bracket")
    A, B, C = (_random_operator(n, stream.split(name)) for name in "ABC")
    c = stream.rational()
    br = dual_poisson_bracket
    checks = CheckList()
    tag = f"n={n}: "
    checks.eq(tag + "{A, B} = -{B, A}", DUAL, br(A, B), -br(B, A))
    checks.eq(tag + "{A, B + C} = {A, B} + {A, C}", DUAL, br(A, B + C), br(A, B) + br(A, C))
    checks.eq(tag + "{A, c B} = c {A, B}", DUAL, br(A, B.scale(DualNum(c))), br(A, B).scale(c))
    B0, C0 = dual_classical_part(B), dual_classical_part(C)
    checks.eq(
        tag + "{A, B C} = {A, B} C + B {A, C}",
        DUAL,
        br(A, mat_mul(B, C)),
        mat_mul(br(A, B), C0) + mat_mul(B0, br(A, C)),
    )
    return checks


def dual_generator_checks(n: int) -> List[Check]:
    """Brackets of fundamental Cartan images with unit matrices E_ij at q = 1 + h."""
    pi = fundamental_rep(n, dual_tower())
    (coords,) = ke_coordinates(n)
    table = PoissonTable(coords)
    dops = pi.ops
    base = MatrixOps(RationalOps(), n)
    unit = {
        (i, j): LabeledMat.unit(n, i, j, dops, dops.one())
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j
    }
    images: Dict[str, Any] = {
        gen_name(k_gen(l)): dual_classical_part(pi.K(l)) for l in range(1, n + 1)
    }
    images.update({gen_name(e_gen(i, j)): dual_classical_part(E) for (i, j), E in unit.items()})
    checks = CheckList()
    for l in range(1, n + 1):
        for m in range(l, n + 1):
            checks.eq(
                f"n={n}: {{K_{l}, K_{m}}} = 0",
                DUAL,
                dual_poisson_bracket(pi.K(l), pi.K(m)),
                LabeledMat.zeros(n, n, RationalOps()),
            )
        for (i, j), E in unit.items():
            checks.eq(
                f"n={n}: {{K_{l}, E_{i}{j}}} matches {{k_{l}, e_{i}{j}}}",
                DUAL,
                dual_poisson_bracket(pi.K(l), E),
                substitute(table.bracket(k_gen(l), e_gen(i, j)), images, base),
            )
    checks.eq(
        f"n={n}: {{E_12, E_21}} of scaled images is the classical part of K1 K2^-1 - K1^-1 K2",
        DUAL,
        dual_poisson_bracket(pi.E(1, 2), pi.E(2, 1)),
        dual_classical_part(mat_mul(pi.K(1), pi.K(2, -1)) - mat_mul(pi.K(1, -1), pi.K(2))),
    )
    name = f"n={n}: unscaled E_12, E_21 are not quasi-commutative"
    try:
        dual_poisson_bracket(unit[(1, 2)], unit[(2, 1)])
    except NotQuasiCommutative:
        checks.append(passed(name, DUAL))
    else:
        checks.append(failed(name, DUAL, {"raised": "nothing"}))
    return checks


def dual_hopf_checks(n: int) -> List[Check]:
    """First-order parts of the quantum coproducts, antipode and counit on fundamental images."""
    pi = fundamental_rep(n, dual_tower())
    first, second = ke_coordinates(n, copies=2)
    (single,) = ke_coordinates(n)
    one_rep = dual_classical_part(pi.identity())
    base = RationalOps()

    single_images: Dict[str, Any] = {}
    for g in simple_generators(n):
        X = pi.images[_quantum_gen(g)]
        single_images[gen_name(g)] = (
            dual_classical_part(X) if g[0] == "k" else dual_h_coefficient(X)
        )
    tensor_images: Dict[str, Any] = {}
    for name, X in single_images.items():
        tensor_images[name + first.suffix] = kron(X, one_rep)
        tensor_images[name + second.suffix] = kron(one_rep, X)
    checks = CheckList()
    for variant in COPRODUCTS:
        rep = coproduct_rep(pi, pi, variant)
        D = classical_coproduct(first, second, variant)
        ops = MatrixOps(base, n * n)
        for g in simple_generators(n):
            X = rep.images[_quantum_gen(g)]
            part = dual_classical_part(X) if g[0] == "k" else dual_h_coefficient(X)
            checks.eq(
                f"n={n} {variant}: first order of D({gen_name(g)})",
                HOPF,
                part,
                substitute(D[g], tensor_images, ops),
            )
    S = antipode_images(pi)
    S_bar = classical_antipode(single)
    eps = counit_images(pi)
    eps_bar = classical_counit(n)
    ops = MatrixOps(base, n)
    for g in simple_generators(n):
        gid = _quantum_gen(g)
        part = dual_classical_part(S[gid]) if g[0] == "k" else dual_h_coefficient(S[gid])
        checks.eq(
            f"n={n}: first order of S({gen_name(g)})",
            HOPF,
            part,
            substitute(S_bar[g], single_images, ops),
        )
        checks.eq(
            f"n={n}: eps({gen_name(g)}) at q = 1",
            HOPF,
            dual_classical_part(eps[gid]),
            QQ(eps_bar[g]),
        )
    return checks


def poisson_tasks(n: int = 2, seed: int = 0) -> List[Task]:
    """Independent units of the Poisson suite; the table-only ones run at n = 2."""
    settings = get_settings()
    if n > settings.quantum_max_n:
        raise ConfigurationError(f"n={n} exceeds the dual-number bound {settings.quantum_max_n}")
    tasks: List[Task] = [
        lambda: verify_r_matrices(n),
        rmatrix_poisson_checks,
        lambda: poisson_map_checks(2),
        lambda: hopf_poisson_checks(n),
        lambda: dual_bracket_checks(n, seed),
        lambda: dual_generator_checks(n),
        lambda: dual_hopf_checks(n),
        lambda: check_classical_limit_consistency(n, seed),
    ]
    if n <= settings.max_n_symbolic:
        tasks.insert(2, lambda: sklyanin_checks(n))
    return tasks


def verify_poisson_structures(n: int = 2, seed: int = 0) -> List[Check]:
    """Every Poisson-level check for rank n, in order."""
    checks: List[Check] = []
    for task in poisson_tasks(n, seed):
        checks.extend(task())
    logger.info("poisson checks done", n=n, checks=len(checks))
    return checks
