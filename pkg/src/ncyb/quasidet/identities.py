"""
Instance-by-instance checks of the quasi-determinant identities
"""

from itertools import combinations
from typing import List, Optional

from ncyb.core.report import Check, compare, guarded, skipped
from ncyb.matrix.inverse import cofactor_det, det, matrix_inverse
from ncyb.matrix.labeled import LabeledMat, drop, mat_mul
from ncyb.matrix.ops import FieldOps
from ncyb.quasidet.core import QuasiDetSession, quasi_det
from ncyb.quasidet.gauss import gauss_decompose, gauss_inverse_factors
from ncyb.utils.exceptions import NotInvertible, Singular, SingularQuasiDet

IDENTITY_GROUPS = ("homological", "laplace", "inversion", "strategies", "gauss", "commutative")


def _minus(rows, x):
    return tuple(r for r in rows if r != x)


def homological_checks(A: LabeledMat, session: QuasiDetSession) -> List[Check]:
    ops = A.ops
    R, C = A.rows, A.cols
    checks = []
    for i in R:
        for j in C:
            for l in _minus(C, j):
                for s in _minus(R, i):
                    name = f"row-homological i={i} j={j} l={l} s={s}"

                    def row_hom(i=i, j=j, l=l, s=s, name=name) -> Check:
                        lhs = ops.neg(
                            ops.mul(
                                session.quasi_det(R, C, i, j),
                                session.inverse_quasi_det(_minus(R, i), _minus(C, l), s, j),
                            )
                        )
                        rhs = ops.mul(
                            session.quasi_det(R, C, i, l),
                            session.inverse_quasi_det(_minus(R, i), _minus(C, j), s, l),
                        )
                        return compare(name, "row homological relation", lhs, rhs, ops.equals)

                    checks.append(guarded(name, "row homological relation", row_hom))
            for k in _minus(R, i):
                for t in _minus(C, j):
                    name = f"column-homological i={i} j={j} k={k} t={t}"

                    def col_hom(i=i, j=j, k=k, t=t, name=name) -> Check:
                        lhs = ops.neg(
                            ops.mul(
                                session.inverse_quasi_det(_minus(R, k), _minus(C, j), i, t),
                                session.quasi_det(R, C, i, j),
                            )
                        )
                        rhs = ops.mul(
                            session.inverse_quasi_det(_minus(R, i), _minus(C, j), k, t),
                            session.quasi_det(R, C, k, j),
                        )
                        return compare(name, "column homological relation", lhs, rhs, ops.equals)

                    checks.append(guarded(name, "column homological relation", col_hom))
    return checks


def laplace_checks(A: LabeledMat, session: QuasiDetSession) -> List[Check]:
    ops = A.ops
    R, C = A.rows, A.cols
    checks = []
    for i in R:
        for j in C:
            for s in _minus(R, i):
                name = f"laplace-row i={i} j={j} s={s}"

                def lap_row(i=i, j=j, s=s, name=name) -> Check:
                    rhs = A.entry(i, j)
                    for k in _minus(C, j):
                        term = ops.mul(
                            ops.mul(
                                A.entry(i, k),
                                session.inverse_quasi_det(_minus(R, i), _minus(C, j), s, k),
                            ),
                            session.quasi_det(_minus(R, i), _minus(C, k), s, j),
                        )
                        rhs = ops.sub(rhs, term)
                    lhs = session.quasi_det(R, C, i, j)
                    return compare(name, "Laplace row expansion", lhs, rhs, ops.equals)

                checks.append(guarded(name, "Laplace row expansion", lap_row))
            for s in _minus(C, j):
                name = f"laplace-column i={i} j={j} s={s}"

                def lap_col(i=i, j=j, s=s, name=name) -> Check:
                    rhs = A.entry(i, j)
                    for k in _minus(R, i):
                        term = ops.mul(
                            ops.mul(
                                session.quasi_det(_minus(R, k), _minus(C, j), i, s),
                                session.inverse_quasi_det(_minus(R, i), _minus(C, j), k, s),
                            ),
                            A.entry(k, j),
                        )
                        rhs = ops.sub(rhs, term)
                    return compare(
                        name,
                        "Laplace column expansion",
                        session.quasi_det(R, C, i, j),
                        rhs,
                        ops.equals,
                    )

                checks.append(guarded(name, "Laplace column expansion", lap_col))
    return checks


def inversion_checks(A: LabeledMat, session: QuasiDetSession) -> List[Check]:
    """|A^{P+k}_{Q+l}|_kl * |B^{I-Q}_{I-P}|_lk = 1 with B = A^-1."""
    ops = A.ops
    R, C = A.rows, A.cols
    try:
        B = matrix_inverse(A)
    except (Singular, NotInvertible) as e:
        error = SingularQuasiDet(str(e), rows=R, cols=C)
        return [skipped("inversion", "inversion identity", error)]
    b_session = QuasiDetSession(B, session.strategy)
    checks = []
    for k in R:
        for l in C:
            rest_r, rest_c = _minus(R, k), _minus(C, l)
            for size in range(len(rest_r) + 1):
                for P in combinations(rest_r, size):
                    for Q in combinations(rest_c, size):
                        name = f"inversion k={k} l={l} P={list(P)} Q={list(Q)}"

                        def inv(k=k, l=l, P=P, Q=Q, name=name) -> Check:
                            a_part = session.quasi_det((*P, k), (*Q, l), k, l)
                            b_rows = [c for c in C if c not in Q]
                            b_cols = [r for r in R if r not in P]
                            b_part = b_session.quasi_det(b_rows, b_cols, l, k)
                            return compare(
                                name, "inversion identity", ops.mul(a_part, b_part), ops.one(),
                                ops.equals,
                            )

                        checks.append(guarded(name, "inversion identity", inv))
    return checks


def strategy_checks(A: LabeledMat) -> List[Check]:
    """recursive and via_inverse agree wherever both are defined."""
    checks = []
    if not A.ops.supports_matrix_inverse:
        return checks
    ops = A.ops
    for i in A.rows:
        for j in A.cols:
            name = f"strategy-agreement i={i} j={j}"

            def agree(i=i, j=j, name=name) -> Check:
                return compare(
                    name,
                    "recursive and inverse-based quasi-determinants",
                    quasi_det(A, i, j, "recursive"),
                    quasi_det(A, i, j, "via_inverse"),
                    ops.equals,
                )

            checks.append(guarded(name, "recursive and inverse-based quasi-determinants", agree))
    return checks


def gauss_checks(A: LabeledMat, session: QuasiDetSession) -> List[Check]:
    checks = []
    for variant in ("senior", "junior"):
        name = f"gauss-{variant}-reconstruction"
        checks.append(
            guarded(
                name,
                f"Gauss decomposition ({variant})",
                lambda variant=variant, name=name: compare(
                    name,
                    f"Gauss decomposition ({variant})",
                    gauss_decompose(A, variant, session).reconstruct(),
                    A,
                ),
            )
        )
        if A.ops.supports_matrix_inverse:
            name_inv = f"gauss-{variant}-inverse-factors"

            def inverse_factors(variant=variant, name=name_inv) -> Check:
                factors = gauss_decompose(A, variant, session)
                E_inv, F_inv = gauss_inverse_factors(A, variant, session)
                left = compare(name, "inverse Gauss factors", mat_mul(factors.E, E_inv), _eye(A))
                if left.status.value != "pass":
                    return left
                return compare(name, "inverse Gauss factors", mat_mul(factors.F, F_inv), _eye(A))

            checks.append(guarded(name_inv, "inverse Gauss factors", inverse_factors))
    return checks


def commutative_checks(A: LabeledMat, session: QuasiDetSession) -> List[Check]:
    """|A|_ij = (-1)^(i+j) det A / det A^ij against the cofactor oracle; field entries only."""
    ops = A.ops
    if not isinstance(ops, FieldOps) or A.shape[0] != A.shape[1]:
        return []
    full = cofactor_det(A)
    checks = [compare("det against cofactor expansion", "determinant oracle", det(A), full)]
    for r, i in enumerate(A.rows):
        for c, j in enumerate(A.cols):
            name = f"commutative-reduction i={i} j={j}"

            def reduction(i=i, j=j, r=r, c=c, name=name) -> Check:
                ratio = ops.mul(full, ops.try_invert(cofactor_det(drop(A, i, j))))
                expected = ratio if (r + c) % 2 == 0 else ops.neg(ratio)
                return compare(
                    name,
                    "commutative quasi-determinant",
                    session.quasi_det(A.rows, A.cols, i, j),
                    expected,
                    ops.equals,
                )

            checks.append(guarded(name, "commutative quasi-determinant", reduction))
    return checks


def _eye(A: LabeledMat) -> LabeledMat:
    return LabeledMat.identity(A.shape[0], A.ops)


def verify_qd_identities(
    A: LabeledMat, which: Optional[List[str]] = None, strategy: str = "auto"
) -> List[Check]:
    """Exact checks of the selected identity groups; singular instances are skipped."""
    which = list(which or IDENTITY_GROUPS)
    unknown = set(which) - set(IDENTITY_GROUPS)
    if unknown:
        raise ValueError(f"unknown identity groups {sorted(unknown)}")
    session = QuasiDetSession(A, strategy)
    runners: dict = {
        "homological": lambda: homological_checks(A, session),
        "laplace": lambda: laplace_checks(A, session),
        "inversion": lambda: inversion_checks(A, session),
        "strategies": lambda: strategy_checks(A),
        "gauss": lambda: gauss_checks(A, session),
        "commutative": lambda: commutative_checks(A, session),
    }
    checks: List[Check] = []
    for group in which:
        checks.extend(runners[group]())
    return checks
