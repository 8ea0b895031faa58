"""
Exact verification of the classical Yang-Baxter map

Symbolic runs certify rational-function identities; numeric runs draw seeded
rational samples and resample singular minors. Each unit of work is a task
returning check records, so the suite runner can spread samples over threads.
"""

from typing import Callable, List, Optional

from sympy.polys.domains import QQ

from ncyb.classical.maps import (
    classical_forward_map,
    classical_inverse_map,
    gauss_checks,
    product_formula,
)
from ncyb.classical.state import MODES, ClassicalState, numeric_state, symbolic_state
from ncyb.config import get_settings
from ncyb.core.report import Check, CheckList, compare, failed, passed, skipped
from ncyb.core.rng import SINGULAR_ERRORS, ResampleLog, SeedStream, with_resampling
from ncyb.matrix.inverse import cauchy_binet_check
from ncyb.matrix.labeled import LabeledMat
from ncyb.matrix.ops import DualOps, FieldOps, MatrixOps, RationalOps
from ncyb.ring.dual import DualNum, dual_classical_part
from ncyb.ring.tower import normalize
from ncyb.uqrep.rep import dual_tower, fundamental_rep
from ncyb.utils.exceptions import ConfigurationError
from ncyb.utils.logging import setup_logger
from ncyb.ybmap.blocks import J_matrix
from ncyb.ybmap.maps import qd_forward_map, qd_inverse_map, qplucker_maps
from ncyb.ybmap.state import Component, YBState, diagonal_part, state_from_rep
from ncyb.ybmap.verify import LEFT_ORDER, RIGHT_ORDER, compose, verify_zero_curvature

logger = setup_logger(__name__)

Task = Callable[[], List[Check]]

ROUND_TRIP = "inverse transformation"
PRODUCT = "senior minor product formula"
REDUCTION = "quasi-determinant maps with commutative entries"
SET_YBE = "set-theoretic Yang-Baxter equation"


def check_bound(n: int, mode: str) -> None:
    settings = get_settings()
    if mode not in MODES:
        raise ConfigurationError(f"classical maps run in symbolic or numeric mode, not {mode!r}")
    bound = settings.max_n_symbolic if mode == "symbolic" else settings.max_n_numeric
    if n > bound:
        raise ConfigurationError(f"n={n} exceeds the {mode} bound {bound}")


def map_checks(state: ClassicalState, tag: str, reduction: bool = True) -> List[Check]:
    """Zero curvature, round trip, product formula and Gauss factors of one instance."""
    tilde = classical_forward_map(state)
    checks: List[Check] = []
    checks.extend(tilde.validate(f"{tag}tilde") if not state.sl else [])
    checks.extend(verify_zero_curvature(state, tilde, "R", tag))
    checks.append(
        classical_inverse_map(tilde).compare(tag + "inverse(forward(x)) = x", ROUND_TRIP, state)
    )
    checks.append(
        classical_forward_map(classical_inverse_map(tilde)).compare(
            tag + "forward(inverse(x~)) = x~", ROUND_TRIP, tilde
        )
    )
    lhs, rhs = product_formula(state)
    checks.append(compare(tag + "|J| = u_n^(2) prod u_k^(1) u_k^(2)", PRODUCT, lhs, rhs))
    checks.extend(gauss_checks(state, tilde, tag))
    if reduction:
        checks.extend(reduction_checks(state, tilde, tag))
    return checks


def reduction_checks(state: ClassicalState, tilde: ClassicalState, tag: str) -> List[Check]:
    """The quasi-determinant and quasi-Pluecker maps on commuting scalars."""
    forward, inverse = qplucker_maps(state, "forward"), qplucker_maps(tilde, "inverse")
    return [
        qd_forward_map(state).compare(tag + "quasi-determinant forward map", REDUCTION, tilde),
        qd_inverse_map(tilde).compare(tag + "quasi-determinant inverse map", REDUCTION, state),
        forward.compare(tag + "quasi-Pluecker forward map", REDUCTION, tilde),
        inverse.compare(tag + "quasi-Pluecker inverse map", REDUCTION, state),
    ]


def symbolic_checks(n: int) -> List[Check]:
    tag = f"n={n} symbolic: "
    state = symbolic_state(n)
    checks = state.validate(tag.rstrip(": "))
    checks.extend(map_checks(state, tag))
    diag = diagonal_part(state)
    fixed = classical_forward_map(diag)
    checks.append(fixed.compare(tag + "diagonal state is fixed", ROUND_TRIP, diag))
    if n == 3:
        checks.extend(sl3_example_checks())
    return checks


def sl3_example_checks() -> List[Check]:
    """The n = 3 example under u_3 = 1: u~_2^(1) = J_33 and ell~+(2)_13 = J_13 / J_33."""
    state = symbolic_state(3, sl=True)
    tilde = classical_forward_map(state)
    J = J_matrix(state)
    checks = CheckList()
    anchor = "n = 3 example"
    checks.eq("sl3: u~_2^(1) = J_33", anchor, tilde.u(1, 2), J.entry(3, 3))
    checks.eq(
        "sl3: ell~+(2)_13 = J_13 / J_33",
        anchor,
        tilde.L(2, 1).entry(1, 3),
        J.entry(1, 3) / J.entry(3, 3),
    )
    checks.eq("sl3: ell~-(1)_33 = J_33", anchor, tilde.L(1, -1).entry(3, 3), J.entry(3, 3))
    lhs, rhs = product_formula(state)
    checks.eq("sl3: |J| = prod_{k<3} u_k^(1) u_k^(2)", PRODUCT, lhs, rhs)
    return checks


def numeric_sample(n: int, stream: SeedStream, index: int) -> List[Check]:
    """One seeded instance; singular minors propagate for resampling."""
    state = numeric_state(n, stream)
    return map_checks(state, f"n={n} sample {index}: ", reduction=index < 10)


def set_ybe_sample(n: int, stream: SeedStream, index: int) -> List[Check]:
    triple = numeric_state(n, stream, components=3)
    left = compose(triple, LEFT_ORDER, classical_forward_map)
    right = compose(triple, RIGHT_ORDER, classical_forward_map)
    return [left.compare(f"n={n} sample {index}: R12 R13 R23 = R23 R13 R12", SET_YBE, right)]


def _resampled(
    name: str, anchor: str, stream: SeedStream, draw: Callable[[SeedStream], List[Check]], log
) -> List[Check]:
    try:
        return with_resampling(stream, draw, log)
    except SINGULAR_ERRORS as e:
        logger.info("resampling exhausted", check=name, reason=str(e))
        return [skipped(name, anchor, e)]


def cauchy_binet_checks(n: int, stream: SeedStream) -> List[Check]:
    anchor = "multiplicative formula for minor determinants"
    checks: List[Check] = []
    A = stream.matrix(3, 3, FieldOps(QQ))
    B = stream.matrix(3, 3, FieldOps(QQ))
    for r in (1, 2, 3):
        bad = cauchy_binet_check(A, B, r)
        name = f"random 3x3, r={r}: Cauchy-Binet"
        checks.append(failed(name, anchor, {"failures": bad}) if bad else passed(name, anchor))
    state = numeric_state(n, stream.split("state"))
    for r in range(1, n + 1):
        bad = cauchy_binet_check(state.L(1, -1), state.L(2, 1), r)
        name = f"n={n} J = ell-(1) ell+(2), r={r}: Cauchy-Binet"
        checks.append(failed(name, anchor, {"failures": bad}) if bad else passed(name, anchor))
    return checks


def classical_tasks(
    n: int,
    mode: str = "symbolic",
    seed: int = 0,
    samples: int = 100,
    log: Optional[ResampleLog] = None,
) -> List[Task]:
    """Independent units of work for the classical suite."""
    check_bound(n, mode)
    log = log if log is not None else ResampleLog()
    root = SeedStream(seed, "classical")
    tasks: List[Task] = []
    if mode == "symbolic":
        tasks.append(lambda: symbolic_checks(n))
    else:
        for s in range(samples):

            def sample(s: int = s) -> List[Check]:
                return _resampled(
                    f"n={n} sample {s}",
                    ROUND_TRIP,
                    root.split(f"map-{s}"),
                    lambda st: numeric_sample(n, st, s),
                    log,
                )

            tasks.append(sample)
    # set-YBE always runs on numeric samples; n <= 4 keeps three-component maps cheap
    ybe_n = min(n, 4)
    for s in range(samples):

        def ybe(s: int = s) -> List[Check]:
            return _resampled(
                f"n={ybe_n} sample {s}: set-YBE",
                SET_YBE,
                root.split(f"ybe-{s}"),
                lambda st: set_ybe_sample(ybe_n, st, s),
                log,
            )

        tasks.append(ybe)
    tasks.append(lambda: cauchy_binet_checks(n, root.split("cauchy-binet")))
    return tasks


def verify_classical_relations(
    n: int,
    mode: str = "symbolic",
    seed: int = 0,
    samples: int = 100,
    log: Optional[ResampleLog] = None,
) -> List[Check]:
    """Run every classical task in order."""
    log = log if log is not None else ResampleLog()
    checks: List[Check] = []
    for task in classical_tasks(n, mode, seed, samples, log):
        checks.extend(task())
    logger.info(
        "classical relations verified",
        n=n,
        mode=mode,
        checks=len(checks),
        resample_rate=log.rate,
    )
    return checks


# quantum map at q = 1 + h against the classical map


def lift_state(state: ClassicalState, stream: SeedStream, dim: int = 2) -> YBState:
    """Each value x becomes x 1 + h R with R a random rational matrix; ell-_{k+1,k+1} reuses u_k."""
    base = RationalOps()
    dops = DualOps(base)
    mops = MatrixOps(dops, dim)
    n = state.n

    def lift(x) -> LabeledMat:
        R = stream.matrix(dim, dim, base)
        grid = [
            [DualNum(QQ.convert(x) if r == c else QQ.zero, R.entries[r][c]) for c in range(dim)]
            for r in range(dim)
        ]
        return LabeledMat(range(1, dim + 1), range(1, dim + 1), grid, dops)

    comps = []
    for a in range(1, len(state.components) + 1):
        U = {0: mops.one(), **{k: lift(state.u(a, k)) for k in range(1, n + 1)}}
        plus, minus = {}, {}
        for i in range(1, n + 1):
            plus[(i, i)] = U[i]
            minus[(i, i)] = U[i - 1]
            for j in range(i + 1, n + 1):
                plus[(i, j)] = lift(state.L(a, 1).entry(i, j))
                minus[(j, i)] = lift(state.L(a, -1).entry(j, i))
        Lplus = LabeledMat.from_dict(n, n, plus, mops)
        comps.append(Component(Lplus, LabeledMat.from_dict(n, n, minus, mops)))
    return YBState(n, (dim,), tuple(comps), "twisted")


def classical_part_matches(name: str, anchor: str, quantum: YBState, classical: YBState) -> Check:
    """Classical part of every operator value equals the scalar value times 1."""
    for a, (qc, cc) in enumerate(zip(quantum.components, classical.components), start=1):
        for sign in (1, -1):
            Q, C = qc.get(sign), cc.get(sign)
            for i in range(1, quantum.n + 1):
                for j in range(1, quantum.n + 1):
                    part = dual_classical_part(Q.entry(i, j))
                    expected = LabeledMat.identity(part.shape[0], part.ops).scale(
                        part.ops.convert(C.entry(i, j))
                    )
                    if not part.equals(expected):
                        return failed(
                            name,
                            anchor,
                            {
                                "component": a,
                                "sign": "+" if sign > 0 else "-",
                                "row": i,
                                "col": j,
                                "quantum": part.describe(),
                                "classical": str(C.entry(i, j)),
                            },
                        )
    return passed(name, anchor)


def _operator_state_part(state: YBState) -> YBState:
    """Scalar state read off operator values that are multiples of 1."""
    ops = FieldOps(QQ)

    def scalar(L: LabeledMat) -> LabeledMat:
        return L.map_entries(lambda v: dual_classical_part(v).entry(1, 1), ops)

    comps = tuple(Component(scalar(c.Lplus), scalar(c.Lminus)) for c in state.components)
    return ClassicalState(state.n, (), comps, "twisted", mode="numeric")


def check_classical_limit_consistency(n: int, seed: int = 0, samples: int = 3) -> List[Check]:
    """Classical part of the quantum map at q = 1 + h against the classical map."""
    check_bound(n, "numeric")
    anchor = "classical limit of the quantum map"
    root = SeedStream(seed, "limit")
    checks: List[Check] = []
    log = ResampleLog()
    for s in range(samples):

        def draw(stream: SeedStream, s: int = s) -> List[Check]:
            state = numeric_state(n, stream.split("values"))
            lifted = lift_state(state, stream.split("h-parts"))
            name = f"n={n} sample {s}: classical part of the quantum map"
            return [
                classical_part_matches(
                    name, anchor, qd_forward_map(lifted), classical_forward_map(state)
                ),
                classical_part_matches(
                    f"n={n} sample {s}: classical part of the lifted state",
                    anchor,
                    lifted,
                    state,
                ),
            ]

        checks.extend(_resampled(f"n={n} sample {s}", anchor, root.split(f"lift-{s}"), draw, log))
    if n <= get_settings().quantum_max_n:
        pi = fundamental_rep(n, dual_tower())
        fund = state_from_rep(pi, pi, "twisted")
        classical = _operator_state_part(fund)
        checks.append(
            classical_part_matches(
                f"n={n}: fundamental state at q = 1 + h", anchor, qd_forward_map(fund), classical
            )
        )
        checks.append(
            classical.compare(
                f"n={n}: classical part of the fundamental state is diagonal",
                anchor,
                diagonal_part(classical),
            )
        )
        checks.append(
            classical_forward_map(classical).compare(
                f"n={n}: classical map fixes the limit of the fundamental state", anchor, classical
            )
        )
    return checks


# demo


def demo_map(n: int = 3) -> str:
    """Forward map of a symbolic state (u_n = 1 when n = 3) as text."""
    check_bound(n, "symbolic")
    state = symbolic_state(n, sl=(n == 3))
    tilde = classical_forward_map(state)
    J = J_matrix(state)
    lines = [f"classical Yang-Baxter map, n={n}" + (", u_3 = 1" if n == 3 else "")]
    lines.append("J = ell-(1) ell+(2):")
    for i in range(1, n + 1):
        lines.append("  " + " | ".join(str(normalize(J.entry(i, j))) for j in range(1, n + 1)))
    for a in (1, 2):
        for sign, label in ((1, "ell~+"), (-1, "ell~-")):
            L = tilde.L(a, sign)
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    v = L.entry(i, j)
                    if (sign > 0 and j < i) or (sign < 0 and j > i):
                        continue
                    lines.append(f"{label}({a})_{i}{j} = {normalize(v)}")
    return "\n".join(lines) + "\n"
