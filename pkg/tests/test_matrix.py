"""
Tests for labeled matrices and inverses
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.domains import QQ

from ncyb.matrix.inverse import (
    cauchy_binet_check,
    cofactor_det,
    det,
    matrix_inverse,
)
from ncyb.matrix.labeled import (
    LabeledMat,
    drop,
    embed_operator,
    kron,
    mat_mul,
    partial_transpose,
    permutation_matrix,
)
from ncyb.matrix.ops import DualOps, MatrixOps, RationalOps
from ncyb.ring.dual import DualNum
from ncyb.utils.exceptions import LabelError, ShapeError, Singular

small = st.integers(-5, 5).map(QQ)
square2 = st.lists(st.lists(small, min_size=2, max_size=2), min_size=2, max_size=2)


@pytest.fixture
def ops():
    """Rational entries"""
    return RationalOps()


@pytest.fixture
def raising():
    """Nilpotent raising operator"""
    return LabeledMat.from_rows([[0, 1], [0, 0]], RationalOps())


@pytest.fixture
def lowering():
    """Nilpotent lowering operator"""
    return LabeledMat.from_rows([[0, 0], [1, 0]], RationalOps())


class TestLabeledMat:
    """Test construction and labels"""

    def test_entries_by_label(self, ops):
        """Test entries are addressed by original labels"""
        A = LabeledMat.from_rows([[1, 2], [3, 4]], ops, rows=("a", "b"), cols=(7, 9))

        assert A.entry("b", 7) == QQ(3)
        assert A["a", 9] == QQ(2)
        with pytest.raises(LabelError):
            A.entry("c", 7)

    def test_duplicate_labels_rejected(self, ops):
        """Test labels are distinct"""
        with pytest.raises(LabelError):
            LabeledMat(("a", "a"), (1,), [[QQ(1)], [QQ(2)]], ops)

    def test_grid_shape_checked(self, ops):
        """Test the grid must match the labels"""
        with pytest.raises(ShapeError):
            LabeledMat((1, 2), (1,), [[QQ(1)]], ops)

    def test_drop_keeps_labels(self, ops):
        """Test removing a row and column keeps the others' labels"""
        A = LabeledMat.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 10]], ops)

        B = drop(A, 2, 1)

        assert B.rows == (1, 3)
        assert B.cols == (2, 3)
        assert B.entry(3, 3) == QQ(10)

    def test_first_difference(self, ops):
        """Test the first unequal entry is reported"""
        A = LabeledMat.from_rows([[1, 2], [3, 4]], ops)
        B = LabeledMat.from_rows([[1, 2], [3, 5]], ops)

        assert A.first_difference(A) is None
        assert A.first_difference(B) == {"row": "2", "col": "2", "lhs": "4", "rhs": "5"}


class TestProducts:
    """Test products in order"""

    def test_operator_entries_keep_order(self, raising, lowering):
        """Test a_ik b_kj is never reordered"""
        ops = MatrixOps(RationalOps(), 2)
        A = LabeledMat.from_rows([[raising]], ops)
        B = LabeledMat.from_rows([[lowering]], ops)

        assert mat_mul(A, B).entry(1, 1).equals(raising @ lowering)
        assert not mat_mul(A, B).entry(1, 1).equals(lowering @ raising)

    def test_shape_mismatch(self, ops):
        """Test nonconforming shapes"""
        with pytest.raises(ShapeError):
            mat_mul(LabeledMat.zeros(2, 3, ops), LabeledMat.zeros(2, 3, ops))

    def test_kron_needs_commutative_scalars(self, raising):
        """Test kron over operators is refused"""
        ops = MatrixOps(RationalOps(), 2)
        A = LabeledMat.from_rows([[raising]], ops)

        with pytest.raises(ShapeError, match="commutative"):
            kron(A, A)

    def test_permutation_swaps_factors(self, raising, lowering, ops):
        """Test P (A (x) B) P = B (x) A and P^2 = 1"""
        P = permutation_matrix(2, ops)

        assert mat_mul(P, P).equals(LabeledMat.identity(4, ops))
        assert mat_mul(mat_mul(P, kron(raising, lowering)), P).equals(kron(lowering, raising))

    def test_embed_reversed_positions(self, raising, lowering, ops):
        """Test positions (1, 0) conjugate by the flip"""
        X = kron(raising, lowering)
        P = permutation_matrix(2, ops)

        assert embed_operator(X, (1, 0), (2, 2)).equals(mat_mul(mat_mul(P, X), P))

    def test_embed_single_factor(self, raising, ops):
        """Test X on factor 1 of 2 is 1 (x) X"""
        embedded = embed_operator(raising, (1,), (2, 2))

        assert embedded.equals(kron(LabeledMat.identity(2, ops), raising))

    def test_partial_transpose(self, raising, lowering):
        """Test transposing the second factor only"""
        M = kron(raising, raising)

        assert partial_transpose(M, (2, 2), 1).equals(kron(raising, lowering))

    @settings(max_examples=30)
    @given(square2, square2, square2)
    def test_associativity(self, a, b, c):
        """Test (AB)C = A(BC)"""
        ops = RationalOps()
        A, B, C = (LabeledMat.from_rows(g, ops) for g in (a, b, c))

        assert mat_mul(mat_mul(A, B), C).equals(mat_mul(A, mat_mul(B, C)))


class TestInverse:
    """Test inverses and determinants"""

    def test_field_inverse_swaps_labels(self, ops):
        """Test the inverse is indexed by columns then rows"""
        A = LabeledMat.from_rows([[2, 1], [1, 1]], ops, rows=("a", "b"), cols=("x", "y"))

        inv = matrix_inverse(A)

        assert inv.rows == ("x", "y")
        assert inv.cols == ("a", "b")
        assert mat_mul(A, inv).equals(LabeledMat.identity(2, ops))

    def test_singular(self, ops):
        """Test singular matrices raise"""
        with pytest.raises(Singular):
            matrix_inverse(LabeledMat.from_rows([[1, 2], [2, 4]], ops))

    def test_dual_inverse(self):
        """Test (A0 + h A1)^-1 over dual numbers"""
        ops = DualOps(RationalOps())
        A = LabeledMat.from_rows(
            [
                [DualNum(QQ(1), QQ(1)), DualNum(QQ(0), QQ(2))],
                [DualNum(QQ(3), QQ(0)), DualNum(QQ(1), QQ(-1))],
            ],
            ops,
        )

        assert mat_mul(A, matrix_inverse(A)).equals(LabeledMat.identity(2, ops))
        assert mat_mul(matrix_inverse(A), A).equals(LabeledMat.identity(2, ops))

    def test_block_inverse(self, raising, ops):
        """Test [[1, X], [0, 1]]^-1 = [[1, -X], [0, 1]] over operators"""
        mops = MatrixOps(ops, 2)
        one, zero = mops.one(), mops.zero()
        A = LabeledMat.from_rows([[one, raising], [zero, one]], mops)

        inv = matrix_inverse(A)

        assert inv.entry(1, 2).equals(-raising)
        assert mat_mul(A, inv).equals(LabeledMat.identity(2, mops))

    def test_det_matches_cofactor(self, ops):
        """Test DomainMatrix determinant against Laplace expansion"""
        A = LabeledMat.from_rows([[2, -1, 3], [0, 4, 1], [5, 2, -2]], ops)

        assert det(A) == cofactor_det(A)
        assert det(A) == QQ(-85)

    def test_cauchy_binet(self, ops):
        """Test minors of a product"""
        A = LabeledMat.from_rows([[1, 2, 0], [3, -1, 4], [2, 2, 5]], ops)
        B = LabeledMat.from_rows([[0, 1, 1], [2, 3, -1], [1, 0, 2]], ops)

        assert cauchy_binet_check(A, B, 2) == []
