"""
Tests for the classical Yang-Baxter map, r-matrices and coordinate brackets
"""

import pytest
from sympy.polys.domains import QQ

from ncyb.classical import (
    CoordinateBracket,
    LeibnizBracket,
    PoissonTable,
    classical_forward_map,
    classical_inverse_map,
    classical_L,
    demo_map,
    dual_poisson_bracket,
    ke_coordinates,
    log_qexp,
    numeric_state,
    product_formula,
    qexp_series_checks,
    symbolic_state,
    verify_classical_relations,
    verify_r_matrices,
)
from ncyb.classical.coords import e_gen, k_gen
from ncyb.classical.rmatrix import cybe_checks
from ncyb.classical.state import coordinate_names
from ncyb.classical.verify import check_bound, symbolic_checks
from ncyb.core.report import CheckStatus
from ncyb.core.rng import ResampleLog, SeedStream
from ncyb.matrix.labeled import LabeledMat
from ncyb.matrix.ops import DualOps, RationalOps
from ncyb.ring.dual import DualNum
from ncyb.ring.tower import gen, get_field
from ncyb.utils.exceptions import (
    ConfigurationError,
    NotQuasiCommutative,
    TowerMismatch,
    UntabulatedBracket,
)


def _failures(checks):
    return [c for c in checks if c.status is CheckStatus.FAIL]


@pytest.fixture(scope="module")
def state():
    """Symbolic two-component state, n = 2"""
    return symbolic_state(2)


class TestClassicalState:
    """Test coordinate value tables"""

    def test_symbolic_state_is_valid(self, state):
        assert _failures(state.validate()) == []
        assert state.mode == "symbolic"

    def test_coordinate_names(self):
        names = coordinate_names(2)

        assert len(names) == 8
        assert names[:4] == ("u1_1", "u2_1", "lp12_1", "lm21_1")

    def test_sl_constraint_drops_last_diagonal(self):
        assert "u3_1" not in coordinate_names(3, sl=True)
        assert _failures(symbolic_state(3, sl=True).validate()) == []

    def test_numeric_state_is_deterministic(self):
        first = numeric_state(2, SeedStream(7))
        second = numeric_state(2, SeedStream(7))

        assert first.equals(second)
        assert first.entry_values(1) == second.entry_values(1)


class TestClassicalMaps:
    """Test the forward and inverse maps"""

    def test_round_trip(self, state):
        tilde = classical_forward_map(state)

        assert classical_inverse_map(tilde).equals(state)
        assert _failures(tilde.validate("tilde")) == []

    def test_product_formula(self, state):
        lhs, rhs = product_formula(state)

        assert lhs == rhs

    @pytest.mark.parametrize("n", [2, 3])
    def test_symbolic_checks(self, n):
        checks = symbolic_checks(n)

        assert checks
        assert _failures(checks) == []

    def test_numeric_relations(self):
        log = ResampleLog()

        checks = verify_classical_relations(2, "numeric", seed=1, samples=3, log=log)

        assert _failures(checks) == []
        assert log.rate >= 0

    def test_bound_errors(self):
        with pytest.raises(ConfigurationError, match="symbolic or numeric"):
            check_bound(2, "exact")
        with pytest.raises(ConfigurationError, match="exceeds the symbolic bound"):
            check_bound(4, "symbolic")

    def test_demo_map(self):
        text = demo_map(2)

        assert text.startswith("classical Yang-Baxter map, n=2")
        assert "ell~+(1)_11 = " in text
        assert "ell~-(2)_21 = " in text


class TestRMatricesAndSeries:
    """Test classical r-matrices and the q-exponential limit"""

    def test_r_matrices(self):
        checks = verify_r_matrices(2)

        assert checks
        assert _failures(checks) == []

    @pytest.mark.parametrize("variant", ["plain", "block"])
    def test_spectral_cybe_needs_normalization(self, variant):
        checks = {c.name: c for c in cybe_checks(2)}

        needed = checks[f"n=2 {variant}: normalization by (x - x^-1) is needed"]

        assert needed.status is CheckStatus.PASS
        assert needed.anchor == "normalization of the spectral CYBE"
        assert checks[f"n=2 {variant}: normalized CYBE"].status is CheckStatus.PASS

    def test_qexp_series(self):
        assert _failures(qexp_series_checks(8)) == []

    def test_qexp_order_too_small(self):
        with pytest.raises(ValueError, match="at least 2"):
            qexp_series_checks(1)

    @pytest.mark.parametrize("x,t", [(1.0, 0.1), (-0.5, 0.1), (0.5, 0.0)])
    def test_log_qexp_domain(self, x, t):
        with pytest.raises(ValueError, match="0 <= x < 1"):
            log_qexp(x, t)

    def test_log_qexp_at_zero(self):
        assert log_qexp(0.0, 0.1) == 0.0


class TestPoissonTable:
    """Test the defining brackets of P(gl(n))"""

    def test_cartan_action(self):
        (c,) = ke_coordinates(2)
        table = PoissonTable(c)

        assert table.bracket(k_gen(1), e_gen(1, 2)) == QQ(1, 2) * c.e(1, 2) * c.k(1)
        assert table.bracket(e_gen(1, 2), k_gen(1)) == -QQ(1, 2) * c.e(1, 2) * c.k(1)
        assert table.bracket(k_gen(1), k_gen(2)) == 0

    def test_raising_lowering(self):
        (c,) = ke_coordinates(2)
        ratio = c.k(1) / c.k(2)

        assert PoissonTable(c).bracket(e_gen(1, 2), e_gen(2, 1)) == ratio - 1 / ratio

    def test_entries_antisymmetric(self):
        (c,) = ke_coordinates(2)
        entries = PoissonTable(c).entries()

        assert all(v == -entries[(y, x)] for (x, y), v in entries.items())

    def test_composite_root_untabulated(self):
        (c,) = ke_coordinates(3)

        with pytest.raises(UntabulatedBracket, match="composite root"):
            PoissonTable(c).bracket(e_gen(1, 2), e_gen(2, 3))

    def test_far_apart_roots_commute(self):
        (c,) = ke_coordinates(4)

        assert PoissonTable(c).bracket(e_gen(1, 2), e_gen(3, 4)) == 0

    def test_classical_L_unknown_gauge(self):
        (c,) = ke_coordinates(2)

        with pytest.raises(ValueError):
            classical_L(c, "sideways")


class TestCoordinateBracket:
    """Test biderivations of coordinate fields"""

    @pytest.fixture
    def canonical(self):
        K = get_field(("x", "y"))
        return CoordinateBracket(K, {("x", "y"): 1}), gen(K, "x"), gen(K, "y")

    def test_leibniz_rule(self, canonical):
        bracket, x, y = canonical

        assert bracket.bracket(x * y, y) == y
        assert bracket.bracket(y, x) == -1
        assert bracket.bracket(x, x) == 0

    def test_jacobiator_vanishes(self, canonical):
        bracket, x, y = canonical

        assert bracket.jacobiator(x, y, x * y) == 0
        assert bracket.antisymmetry_failures() == []

    def test_unknown_variable(self):
        K = get_field(("x", "y"))

        with pytest.raises(TowerMismatch, match="not a variable"):
            CoordinateBracket(K, {("x", "z"): 1})

    def test_leibniz_table_is_poisson(self):
        coords = ke_coordinates(2)
        bracket = LeibnizBracket.from_poisson_table(coords)
        (c,) = coords

        assert bracket.antisymmetry_failures() == []
        assert bracket.jacobiator(c.e(1, 2), c.e(2, 1), c.k(1)) == 0

    def test_leibniz_table_only_rank_two(self):
        with pytest.raises(ConfigurationError, match="only for n = 2"):
            LeibnizBracket.from_poisson_table(ke_coordinates(3))


class TestDualPoissonBracket:
    """Test {a, b} = [a, b] / 2h"""

    @pytest.fixture
    def ops(self):
        return DualOps(RationalOps())

    def test_bracket_is_h_coefficient(self, ops):
        a = LabeledMat.diag([DualNum(QQ(1), QQ(0)), DualNum(QQ(2), QQ(0))], ops)
        b = LabeledMat.unit(2, 1, 2, ops, DualNum(QQ(0), QQ(1)))

        result = dual_poisson_bracket(a, b)

        assert result.equals(LabeledMat.unit(2, 1, 2, RationalOps(), QQ(-1, 2)))

    def test_noncommuting_classical_parts(self, ops):
        a = LabeledMat.unit(2, 1, 2, ops)
        b = LabeledMat.unit(2, 2, 1, ops)

        with pytest.raises(NotQuasiCommutative):
            dual_poisson_bracket(a, b)
