"""
Tests for scalar towers, dual numbers and truncated series
"""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy.polys.domains import QQ

from ncyb.matrix.ops import RationalOps
from ncyb.ring.dual import H, DualNum, dual_classical_part, dual_h_coefficient, q_dual
from ncyb.ring.series import (
    TruncSeries,
    geometric_series,
    li2,
    q_exp_series,
    series_substitute_scaled,
)
from ncyb.ring.tower import (
    embed,
    eval_q,
    gen,
    get_field,
    q_number,
    q_power,
    qfield,
    qrat,
    scalar_arith,
    scalar_invert,
    spectral_field,
    substitute,
    to_dual,
)
from ncyb.utils.exceptions import NotInvertible, TowerMismatch

rationals = st.tuples(st.integers(-20, 20), st.integers(1, 9)).map(lambda t: QQ(*t))
duals = st.tuples(rationals, rationals).map(lambda t: DualNum(*t))


@pytest.fixture
def q():
    """Generator of Q(q)"""
    return gen(qfield(), "q")


class TestTower:
    """Test exact scalar towers"""

    def test_empty_field_rejected(self):
        """Test a field needs a variable"""
        with pytest.raises(TowerMismatch):
            get_field(())

    def test_unknown_variable(self):
        """Test asking for an absent variable"""
        with pytest.raises(TowerMismatch, match="lam"):
            gen(qfield(), "lam")

    def test_laurent_powers(self, q):
        """Test negative powers are inverses"""
        assert q_power(-2) * q_power(2) == qfield().one
        assert q_power(3) == q**3

    def test_zero_denominator(self):
        """Test rationals with zero denominator"""
        with pytest.raises(NotInvertible):
            qrat(1, 0)

    def test_mixed_towers_rejected(self, q):
        """Test operands from different towers do not mix"""
        other = gen(spectral_field(), "q")

        with pytest.raises(TowerMismatch):
            scalar_arith(q, other, "add")

    def test_invert(self, q):
        """Test scalar inverses"""
        assert scalar_invert(QQ(2)) == QQ(1, 2)
        assert scalar_invert(q) * q == qfield().one
        with pytest.raises(NotInvertible):
            scalar_invert(QQ(0))

    def test_embed(self, q):
        """Test embedding into a larger field matches variables by name"""
        K = spectral_field()

        assert embed(q, K) == gen(K, "q")
        with pytest.raises(TowerMismatch, match="cannot embed"):
            embed(gen(K, "lam"), qfield())

    def test_eval_q(self, q):
        """Test substituting a rational for q"""
        assert eval_q((q + 1) / q, 2) == QQ(3, 2)
        with pytest.raises(NotInvertible):
            eval_q(qfield().one / (q - 1), 1)

    def test_q_number(self, q):
        """Test (3)_q = 1 + q + q^2"""
        assert q_number(3, q) == 1 + q + q**2

    def test_to_dual(self, q):
        """Test the image at q = 1 + h"""
        assert to_dual(q**2) == DualNum(QQ(1), QQ(2))
        assert to_dual(q_power(-1)) == DualNum(QQ(1), QQ(-1))
        assert to_dual(QQ(5)) == DualNum(QQ(5), QQ(0))

    def test_substitute(self, q):
        """Test evaluating a rational function in a ring"""
        assert substitute(q**2 + 1, {"q": QQ(2)}, RationalOps()) == QQ(5)
        with pytest.raises(TowerMismatch, match="no value"):
            substitute(q, {}, RationalOps())
        with pytest.raises(NotInvertible):
            substitute(qfield().one / (q - 1), {"q": QQ(1)}, RationalOps())


class TestDualNum:
    """Test dual numbers"""

    def test_h_squares_to_zero(self):
        """Test h**2 = 0"""
        assert H * H == 0

    def test_inverse(self):
        """Test (1 + h)^-1 = 1 - h"""
        assert (1 + H).inverse() == DualNum(QQ(1), QQ(-1))

    def test_nilpotent_not_invertible(self):
        """Test a pure h-part has no inverse"""
        with pytest.raises(NotInvertible):
            H.inverse()

    def test_q_powers(self):
        """Test q^m = 1 + m h"""
        assert q_dual(1) * q_dual(1) == q_dual(2)
        assert q_dual(3) ** -1 == q_dual(-3)

    def test_parts_of_containers(self):
        """Test parts are taken componentwise"""
        data = {"a": q_dual(3), "b": DualNum(QQ(2), QQ(0))}

        assert dual_h_coefficient(data) == {"a": QQ(3), "b": QQ(0)}
        assert dual_classical_part(data) == {"a": QQ(1), "b": QQ(2)}

    @given(duals, duals, duals)
    def test_ring_laws(self, a, b, c):
        """Test associativity, commutativity and distributivity"""
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c

    @given(duals)
    def test_inverse_law(self, a):
        """Test inverses exist exactly off the nilpotent ideal"""
        if a.classical:
            assert a * a.inverse() == 1
        else:
            with pytest.raises(NotInvertible):
                a.inverse()


class TestTruncSeries:
    """Test truncated power series"""

    def test_geometric_inverse(self, q):
        """Test 1/(1 - q x) is the geometric series"""
        K = qfield()
        one_minus_qx = TruncSeries.from_coefficients([K.one, -q], 5, K)

        assert one_minus_qx.inverse() == geometric_series(q, 5)
        assert one_minus_qx * geometric_series(q, 5) == TruncSeries.from_coefficients(
            [K.one], 5, K
        )

    def test_zero_constant_term(self, q):
        """Test series without constant term are not invertible"""
        K = qfield()

        with pytest.raises(NotInvertible):
            TruncSeries.from_coefficients([0, K.one], 4, K).inverse()

    def test_orders_must_match(self):
        """Test series of different orders do not mix"""
        K = qfield()

        with pytest.raises(TowerMismatch, match="orders differ"):
            geometric_series(K.one, 3) + geometric_series(K.one, 4)

    def test_scaled_substitution(self, q):
        """Test s(c x) scales coefficient k by c^k"""
        K = qfield()

        assert series_substitute_scaled(geometric_series(K.one, 6), q) == geometric_series(q, 6)

    def test_truncate(self, q):
        """Test truncation drops high coefficients"""
        assert geometric_series(q, 6).truncate(2) == geometric_series(q, 2)

    def test_q_exponential_leading_terms(self, q):
        """Test f(x) = 1 + x / (q - q^-1) + ..."""
        f = q_exp_series(4)

        assert f.coefficient(0) == qfield().one
        assert f.coefficient(1) == qfield().one / (q - 1 / q)

    def test_q_exponential_functional_equation(self, q):
        """Test f(q^2 x)(1 - q x) = f(x)"""
        K = qfield()
        f = q_exp_series(8)
        one_minus_qx = TruncSeries.from_coefficients([K.one, -q], 8, K)

        assert series_substitute_scaled(f, q_power(2)) * one_minus_qx == f


class TestDilogarithm:
    """Test the real dilogarithm"""

    def test_special_values(self):
        """Test closed forms at 1/2, 1 and -1"""
        assert math.isclose(li2(0.5), math.pi**2 / 12 - math.log(2) ** 2 / 2, rel_tol=1e-12)
        assert li2(1) == math.pi**2 / 6
        assert math.isclose(li2(-1), -math.pi**2 / 12, rel_tol=1e-12)

    def test_above_one_rejected(self):
        """Test li2 is real only up to 1"""
        with pytest.raises(ValueError):
            li2(1.5)
