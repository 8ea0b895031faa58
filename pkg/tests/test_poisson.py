"""
Tests for the quasi-classical Poisson structures
"""

import pytest

from ncyb.classical import classical_antipode, classical_coproduct, classical_counit
from ncyb.classical.coords import e_gen, k_gen, ke_coordinates
from ncyb.classical.poisson import (
    dual_bracket_checks,
    dual_generator_checks,
    dual_hopf_checks,
    hopf_poisson_checks,
    poisson_map_checks,
    poisson_tasks,
    rmatrix_poisson_checks,
    sklyanin_checks,
)
from ncyb.classical.verify import check_classical_limit_consistency
from ncyb.core.report import CheckStatus
from ncyb.utils.exceptions import ConfigurationError


def _failures(checks):
    return [c for c in checks if c.status is CheckStatus.FAIL]


class TestClassicalHopf:
    """Test coproduct, antipode and counit on generators"""

    def test_counit(self):
        eps = classical_counit(2)

        assert eps[k_gen(1)] == 1
        assert eps[e_gen(1, 2)] == 0
        assert eps[e_gen(2, 1)] == 0

    def test_coproduct_of_cartan_is_grouplike(self):
        first, second = ke_coordinates(2, copies=2)

        image = classical_coproduct(first, second)

        assert image[k_gen(2)] == first.k(2) * second.k(2)

    def test_twisted_coproduct(self):
        first, second = ke_coordinates(2, copies=2)

        image = classical_coproduct(first, second, "delta_F")

        expected = first.e(1, 2) * second.k(1) + second.e(1, 2) / first.k(1)
        assert image[e_gen(1, 2)] == expected

    def test_unknown_coproduct(self):
        first, second = ke_coordinates(2, copies=2)

        with pytest.raises(ValueError, match="unknown coproduct"):
            classical_coproduct(first, second, "delta_G")

    def test_antipode_inverts_cartan(self):
        (c,) = ke_coordinates(2)

        assert classical_antipode(c)[k_gen(1)] * c.k(1) == 1


class TestPoissonChecks:
    """Test each family of Poisson checks at rank 2"""

    @pytest.mark.parametrize(
        "checks",
        [
            pytest.param(rmatrix_poisson_checks, id="rmatrix"),
            pytest.param(lambda: sklyanin_checks(2), id="sklyanin"),
            pytest.param(lambda: poisson_map_checks(2), id="poisson-map"),
            pytest.param(lambda: hopf_poisson_checks(2), id="hopf"),
            pytest.param(lambda: dual_bracket_checks(2, 0), id="dual-bracket"),
            pytest.param(lambda: dual_generator_checks(2), id="dual-generators"),
            pytest.param(lambda: dual_hopf_checks(2), id="dual-hopf"),
        ],
    )
    def test_no_failures(self, checks):
        result = checks()

        assert result
        assert _failures(result) == []

    def test_classical_limit_of_quantum_map(self):
        checks = check_classical_limit_consistency(2, seed=0, samples=2)

        assert len(checks) >= 5
        assert _failures(checks) == []

    def test_tasks_respect_quantum_bound(self):
        with pytest.raises(ConfigurationError, match="dual-number bound"):
            poisson_tasks(4)

    def test_sklyanin_task_included_within_symbolic_bound(self):
        assert len(poisson_tasks(2)) == 9
