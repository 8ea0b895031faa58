"""
Tests for quasi-determinants and Gauss decompositions
"""

import pytest
from sympy.polys.domains import QQ

from ncyb.core.report import CheckStatus
from ncyb.core.suites import symbolic_matrix
from ncyb.matrix.inverse import matrix_inverse
from ncyb.matrix.labeled import LabeledMat, mat_mul
from ncyb.matrix.ops import MatrixOps, RationalOps
from ncyb.quasidet import (
    QuasiDetSession,
    gauss_decompose,
    gauss_inverse_factors,
    inverse_factor_entry,
    inverse_via_quasidet,
    left_qplucker,
    quasi_det,
    verify_qd_identities,
)
from ncyb.utils.exceptions import LabelError, SingularQuasiDet


@pytest.fixture
def two_by_two():
    """[[1, 2], [3, 4]] over QQ"""
    return LabeledMat.from_rows([[1, 2], [3, 4]], RationalOps())


@pytest.fixture
def generic():
    """3x3 rational matrix whose corner minors and inverse entries are all nonzero"""
    return LabeledMat.from_rows([[2, 1, 1], [1, 3, 2], [1, 1, 4]], RationalOps())


@pytest.fixture
def operator_matrix():
    """[[1, e], [f, 1]] with e, f the 2x2 nilpotents"""
    ops = MatrixOps(RationalOps(), 2)
    e = LabeledMat.from_rows([[0, 1], [0, 0]], RationalOps())
    f = LabeledMat.from_rows([[0, 0], [1, 0]], RationalOps())
    return LabeledMat.from_rows([[ops.one(), e], [f, ops.one()]], ops)


@pytest.fixture
def unipotent_operator():
    """[[1, e], [e, 1]], invertible with every pivot equal to 1"""
    ops = MatrixOps(RationalOps(), 2)
    e = LabeledMat.from_rows([[0, 1], [0, 0]], RationalOps())
    return LabeledMat.from_rows([[ops.one(), e], [e, ops.one()]], ops)


def _failures(checks):
    return [c for c in checks if c.status is CheckStatus.FAIL]


class TestQuasiDet:
    """Test quasi-determinant evaluation"""

    @pytest.mark.parametrize(
        "i,j,expected",
        [(1, 1, QQ(-1, 2)), (1, 2, QQ(2, 3)), (2, 1, QQ(1)), (2, 2, QQ(-2))],
    )
    @pytest.mark.parametrize("strategy", ["recursive", "via_inverse"])
    def test_two_by_two(self, two_by_two, i, j, expected, strategy):
        """Test |A|_ij = a_ij - a_ik a_lk^-1 a_lj"""
        assert quasi_det(two_by_two, i, j, strategy) == expected

    def test_inverse_entries(self, generic):
        """Test B[j, i] = |A|_ij^-1 is the inverse matrix"""
        assert inverse_via_quasidet(generic).equals(matrix_inverse(generic))

    def test_operator_entries(self, operator_matrix):
        """Test |A|_11 = 1 - e f over operators, both strategies"""
        expected = LabeledMat.diag([QQ(0), QQ(1)], RationalOps())

        for strategy in ("recursive", "via_inverse"):
            assert quasi_det(operator_matrix, 1, 1, strategy).equals(expected)

    def test_singular_minor(self):
        """Test a vanishing pivot names its minor"""
        A = LabeledMat.from_rows([[1, 2], [5, 0]], RationalOps())

        with pytest.raises(SingularQuasiDet) as info:
            quasi_det(A, 1, 1, "recursive")
        assert info.value.minor()["rows"] == ["2"]

    def test_frame_outside_labels(self, two_by_two):
        """Test the frame must be a label pair"""
        with pytest.raises(LabelError):
            quasi_det(two_by_two, 3, 1)

    def test_unknown_strategy(self, two_by_two):
        """Test strategies are validated"""
        with pytest.raises(ValueError, match="unknown strategy"):
            QuasiDetSession(two_by_two, "cramer")

    def test_memoized(self, generic):
        """Test values are cached per session"""
        session = QuasiDetSession(generic)

        first = session.full(2, 3)

        assert session.full(2, 3) is first

    def test_qplucker_diagonal_is_one(self):
        """Test q^J_ii = 1"""
        A = LabeledMat.from_rows([[1, 2, 3], [4, 5, 7]], RationalOps())

        assert left_qplucker(A, 1, 1, [3], 1) == QQ(1)
        with pytest.raises(LabelError, match="outside J"):
            left_qplucker(A, 1, 3, [3], 1)


class TestGauss:
    """Test Gauss decompositions"""

    @pytest.mark.parametrize("variant", ["senior", "junior"])
    def test_reconstruction(self, generic, variant):
        """Test the factors multiply back to A"""
        factors = gauss_decompose(generic, variant)

        assert factors.reconstruct().equals(generic)

    @pytest.mark.parametrize("variant", ["senior", "junior"])
    def test_operator_reconstruction(self, unipotent_operator, variant):
        """Test decomposition over operator entries"""
        A = unipotent_operator

        assert gauss_decompose(A, variant).reconstruct().equals(A)

    def test_senior_pivots(self, generic):
        """Test senior pivots are trailing quasi-determinants"""
        H = gauss_decompose(generic, "senior").diagonal()

        assert H[2] == QQ(4)
        assert H[0] == quasi_det(generic, 1, 1)

    @pytest.mark.parametrize("variant", ["senior", "junior"])
    def test_inverse_factors(self, generic, variant):
        """Test E^-1 and F^-1 from swapped quasi-determinants"""
        factors = gauss_decompose(generic, variant)
        E_inv, F_inv = gauss_inverse_factors(generic, variant)
        eye = LabeledMat.identity(3, RationalOps())

        assert mat_mul(factors.E, E_inv).equals(eye)
        assert mat_mul(factors.F, F_inv).equals(eye)

    @pytest.mark.parametrize("variant", ["senior", "junior"])
    def test_inverse_factor_entry(self, generic, variant):
        """Test single entries of E^-1 and F^-1 agree with the full factors"""
        E_inv, F_inv = gauss_inverse_factors(generic, variant)
        session = QuasiDetSession(generic)

        assert inverse_factor_entry(session, variant, "E", 0, 2) == E_inv.entries[0][2]
        assert inverse_factor_entry(session, variant, "F", 1, 2) == F_inv.entries[2][1]

    def test_unknown_factor(self, generic):
        """Test factor names are validated"""
        with pytest.raises(ValueError, match="unknown Gauss factor"):
            inverse_factor_entry(QuasiDetSession(generic), "senior", "H", 0, 1)

    def test_unknown_variant(self, generic):
        """Test variants are validated"""
        with pytest.raises(ValueError, match="unknown Gauss variant"):
            gauss_decompose(generic, "middle")


class TestIdentities:
    """Test the identity checks themselves"""

    def test_rational_instance(self, generic):
        """Test every identity holds on a generic rational matrix"""
        checks = verify_qd_identities(generic)

        assert checks
        assert _failures(checks) == []
        assert any(c.name.startswith("commutative-reduction") for c in checks)

    def test_operator_instance(self, operator_matrix):
        """Test identities over operators skip the commutative group"""
        checks = verify_qd_identities(operator_matrix)

        assert _failures(checks) == []
        assert not any(c.name.startswith("commutative-reduction") for c in checks)

    def test_symbolic_instance(self):
        """Test identities on a matrix of independent variables"""
        checks = verify_qd_identities(symbolic_matrix(2))

        assert _failures(checks) == []
        assert all(c.status is CheckStatus.PASS for c in checks)

    def test_unknown_group(self, generic):
        """Test identity groups are validated"""
        with pytest.raises(ValueError, match="unknown identity groups"):
            verify_qd_identities(generic, ["cramer"])
