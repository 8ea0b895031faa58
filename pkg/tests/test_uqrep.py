"""
Tests for U_q(gl(n)) representations, Hopf maps and R-matrices
"""

import pytest

from ncyb.core.report import CheckStatus
from ncyb.matrix.labeled import LabeledMat, commutator, embed_operator, mat_mul, mat_product
from ncyb.ring.tower import gen, qfield
from ncyb.uqrep import (
    GenId,
    antipode_images,
    counit_images,
    coproduct_rep,
    dual_rep,
    fundamental_rep,
    numeric_R,
    ordered_pairs,
    q_exponential,
    q_tower,
    verify_algebra_relations,
)
from ncyb.uqrep.verify import relation_checks
from ncyb.utils.exceptions import ConfigurationError, NotNilpotent, WeightError


@pytest.fixture
def pi2():
    """Fundamental representation of U_q(gl(2))"""
    return fundamental_rep(2)


@pytest.fixture
def q():
    return gen(qfield(), "q")


def _failures(checks):
    return [c for c in checks if c.status is CheckStatus.FAIL]


class TestRepresentations:
    """Test generator images"""

    def test_fundamental_images(self, pi2, q):
        """Test pi(E_12) = (q - q^-1) E_12 and pi(q^E_11) = diag(q, 1)"""
        assert pi2.E(1, 2).entry(1, 2) == q - 1 / q
        assert pi2.K(1).entry(1, 1) == q
        assert pi2.K(1).entry(2, 2) == qfield().one
        assert pi2.weights == ((1, 0), (0, 1))

    def test_defining_commutator(self, pi2):
        """Test [E_12, E_21] = (q - q^-1)(H - H^-1)"""
        tower = pi2.tower
        c = tower.q_pow(1) - tower.q_pow(-1)

        lhs = commutator(pi2.E(1, 2), pi2.E(2, 1))

        assert lhs.equals((pi2.H(1) - pi2.H(1, -1)).scale(c))

    def test_composite_root_vectors(self):
        """Test gl(3) images include E_13 and E_31"""
        pi3 = fundamental_rep(3)

        assert GenId.E(1, 3) in pi3.images
        assert GenId.E(3, 1) in pi3.images
        assert not pi3.E(1, 3).is_zero()

    def test_rank_validated(self):
        """Test rank 1 is rejected"""
        with pytest.raises(WeightError):
            fundamental_rep(1)

    def test_unknown_coproduct(self, pi2):
        """Test coproduct names are validated"""
        with pytest.raises(ValueError, match="unknown coproduct"):
            coproduct_rep(pi2, pi2, "delta_X")

    @pytest.mark.parametrize("variant", ["delta", "delta_op", "delta_F", "delta_F_op"])
    def test_coproducts_are_representations(self, pi2, variant):
        """Test every coproduct gives a representation on the tensor square"""
        rep = coproduct_rep(pi2, pi2, variant)

        assert rep.dim == 4
        assert _failures(relation_checks(rep)) == []

    def test_dual_is_representation(self, pi2):
        """Test the contragredient representation satisfies the relations"""
        rep = dual_rep(pi2)

        assert rep.weights == ((-1, 0), (0, -1))
        assert _failures(relation_checks(rep)) == []

    def test_generator_names(self):
        """Test generator labels"""
        assert str(GenId.E(1, 2)) == "E12"
        assert str(GenId.Kminus(2)) == "q^(-E22)"
        assert GenId.E(1, 2).is_simple
        assert not GenId.E(1, 3).is_simple


class TestHopfMaps:
    """Test counit and antipode images"""

    def test_counit(self, pi2):
        """Test epsilon kills E and sends q^E to 1"""
        eps = counit_images(pi2)
        ops = pi2.ops

        assert eps[GenId.E(1, 2)] == ops.zero()
        assert eps[GenId.Kplus(1)] == ops.one()

    def test_antipode_inverts_cartan(self, pi2):
        """Test S(q^E_kk) = q^-E_kk"""
        S = antipode_images(pi2)

        assert S[GenId.Kplus(1)].equals(pi2.K(1, -1))

    def test_antipode_axiom_on_raising(self, pi2):
        """Test m(S x id) Delta(E_12) = 0, i.e. S(E) H + E = 0"""
        S = antipode_images(pi2)

        lhs = mat_mul(S[GenId.E(1, 2)], pi2.H(1)) + pi2.E(1, 2)

        assert lhs.is_zero()


class TestRMatrices:
    """Test q-exponentials and closed-form R-matrices"""

    def test_q_exponential_of_nilpotent(self, pi2):
        """Test exp_p(e) = 1 + e for e^2 = 0"""
        tower = q_tower()
        e = LabeledMat.unit(2, 1, 2, tower.ops)

        assert q_exponential(e, -2, tower).equals(pi2.identity() + e)

    def test_q_exponential_needs_nilpotent(self, pi2):
        """Test non-nilpotent arguments are rejected"""
        with pytest.raises(NotNilpotent):
            q_exponential(pi2.identity(), -2, q_tower())

    def test_ordered_pairs(self):
        """Test reverse-lexicographic order of positive roots"""
        assert ordered_pairs(3) == [(2, 3), (1, 3), (1, 2)]
        assert ordered_pairs(3, reverse=True) == [(1, 2), (1, 3), (2, 3)]

    def test_plain_entries(self, q):
        """Test diagonal and off-diagonal entries of R^+"""
        R = numeric_R(2)

        assert R.plus.entry(1, 1) == q
        assert R.plus.entry(2, 2) == qfield().one
        assert R.plus.entry(2, 3) == q - 1 / q

    @pytest.mark.parametrize("variant", ["plain", "block"])
    def test_yang_baxter_equation(self, variant):
        """Test R12 R13 R23 = R23 R13 R12 on C^2 (x) C^2 (x) C^2"""
        R = numeric_R(2, variant).plus
        dims = (2, 2, 2)
        R12, R13, R23 = (embed_operator(R, pos, dims) for pos in ((0, 1), (0, 2), (1, 2)))

        assert mat_product([R12, R13, R23]).equals(mat_product([R23, R13, R12]))

    def test_unknown_variant(self):
        """Test R-matrix variants are validated"""
        with pytest.raises(ValueError):
            numeric_R(2, "other")


class TestVerifyAlgebra:
    """Test the algebra suite entry point"""

    @pytest.mark.parametrize("n", [2, 3])
    def test_all_identities(self, n):
        """Test every algebra identity holds for gl(2) and gl(3)"""
        checks = verify_algebra_relations(n)

        assert checks
        assert _failures(checks) == []

    def test_selected_groups(self):
        """Test selecting identity groups"""
        checks = verify_algebra_relations(2, gauge="plain", suites=["relations"])

        assert checks
        anchors = {c.anchor for c in checks}
        assert anchors <= {
            "Cartan inverses",
            "Cartan conjugation",
            "defining commutator",
            "distant generators",
            "Serre relation",
        }

    def test_quantum_bound(self):
        """Test ranks above the quantum bound are refused"""
        with pytest.raises(ConfigurationError, match="quantum bound"):
            verify_algebra_relations(4)

    def test_unknown_group(self):
        """Test unknown groups are refused"""
        with pytest.raises(ConfigurationError, match="unknown algebra suites"):
            verify_algebra_relations(2, suites=["cartan"])
