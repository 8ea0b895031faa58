"""
Tests for the quantum Yang-Baxter map
"""

import pytest

from ncyb.core.report import CheckStatus
from ncyb.core.rng import ResampleLog
from ncyb.matrix.labeled import LabeledMat
from ncyb.utils.exceptions import ConfigurationError, ShapeError, WeightError
from ncyb.ybmap import (
    YBState,
    adjoint_map,
    delta,
    demo_quantum_map,
    qd_forward_map,
    qd_inverse_map,
    qplucker_maps,
    star_map,
    star_map_inverse,
    state_from_rep,
    swap,
    verify_hopf_properties,
    verify_set_ybe,
    verify_yb_map,
    verify_zero_curvature,
)
from ncyb.ybmap.verify import (
    R_image,
    corrupt,
    fundamental_pair,
    gauss_dictionary_checks,
    gauss_intermediates,
    structure_checks,
    ybmap_tasks,
)


@pytest.fixture(scope="module")
def pair():
    """Fundamental representation and the twisted state on pi (x) pi, n = 2"""
    return fundamental_pair(2)


@pytest.fixture(scope="module")
def forward(pair):
    """Image of the fundamental state under the map"""
    return qd_forward_map(pair[1])


def _failures(checks):
    return [c for c in checks if c.status is CheckStatus.FAIL]


class TestState:
    """Test value tables"""

    def test_fundamental_state_is_valid(self, pair):
        """Test triangularity, diagonal dictionary and commuting components"""
        _, s = pair

        assert isinstance(s, YBState)
        assert s.dims == (2, 2)
        assert _failures(s.validate()) == []

    def test_unknown_gauge(self, pair):
        """Test gauges are validated"""
        pi, _ = pair

        with pytest.raises(WeightError, match="unknown gauge"):
            state_from_rep(pi, pi, "diagonal")

    def test_swap(self, pair):
        """Test exchanging superscripts"""
        _, s = pair

        swapped = swap(s)

        assert swapped.L(1, 1).equals(s.L(2, 1))
        assert swap(swapped).equals(s)

    def test_delta_merges(self, pair):
        """Test delta leaves one component L(2) L(1)"""
        _, s = pair

        merged = delta(s, 1, 2)

        assert len(merged.components) == 1

    def test_adjoint_shape(self, pair):
        """Test conjugators must act on the carrier"""
        _, s = pair
        wrong = LabeledMat.identity(2, s.ops.entry_ops)

        with pytest.raises(ShapeError):
            adjoint_map(s, wrong)


class TestMaps:
    """Test formula maps against their oracles"""

    def test_forward_is_conjugation_by_R(self, pair, forward):
        """Test the formula map agrees with Ad(R) on the fundamental state"""
        pi, s = pair

        assert forward.equals(adjoint_map(s, R_image(pi)))

    def test_round_trip(self, pair, forward):
        """Test inverse . forward = id"""
        assert qd_inverse_map(forward).equals(pair[1])

    def test_qplucker_form(self, pair, forward):
        """Test the ratio-of-minors form gives the same map"""
        assert qplucker_maps(pair[1], "forward").equals(forward)

    def test_star_round_trip(self, pair):
        """Test the starred map inverts"""
        _, s = pair

        assert star_map_inverse(star_map(s)).equals(s)

    def test_zero_curvature(self, pair, forward):
        """Test the Lax equations hold for the image"""
        assert _failures(verify_zero_curvature(pair[1], forward)) == []

    def test_corrupted_image_fails(self, pair, forward):
        """Test a perturbed image violates zero curvature"""
        assert _failures(verify_zero_curvature(pair[1], corrupt(forward)))

    def test_unknown_zero_curvature_variant(self, pair, forward):
        """Test variants are validated"""
        with pytest.raises(ValueError):
            verify_zero_curvature(pair[1], forward, "Rbar")

    def test_gauss_dictionary(self, pair, forward):
        """Test the Gauss factors of J and J~ against the map values"""
        checks = {c.name: c for c in gauss_dictionary_checks(pair[1], forward, "n=2: ")}

        assert len(checks) == 10
        assert all(c.status is CheckStatus.PASS for c in checks.values())
        assert "n=2: E_12 = L~+(2)_12 (u~_2(2))^-1" in checks
        assert "n=2: F_21 = (u~_1(1))^-1 L~-(1)_21" in checks
        assert "n=2: H~_2 = u_1(1) u_2(2)" in checks

    def test_gauss_dictionary_detects_corruption(self, pair, forward):
        """Test a perturbed image breaks the dictionary for E_12"""
        mid = gauss_intermediates(pair[1], forward)

        checks = {
            c.name: c for c in gauss_dictionary_checks(pair[1], corrupt(forward, 2), mid=mid)
        }

        assert checks["E_12 = L~+(2)_12 (u~_2(2))^-1"].status is CheckStatus.FAIL


class TestVerification:
    """Test suite-level entry points"""

    def test_set_yang_baxter(self):
        """Test R12 R13 R23 = R23 R13 R12 on the fundamental triple"""
        checks = verify_set_ybe(2)

        assert _failures(checks) == []
        assert all(c.status is CheckStatus.PASS for c in checks)

    def test_hopf_properties(self):
        """Test coproduct, counit and antipode compatibility"""
        assert _failures(verify_hopf_properties(2)) == []

    def test_yb_map_suite(self):
        """Test the full map suite at n = 2"""
        log = ResampleLog()

        checks = verify_yb_map(2, seed=5, log=log)

        assert checks
        assert _failures(checks) == []

    def test_yb_map_suite_rank_three(self):
        """Test the full map suite at n = 3"""
        checks = verify_yb_map(3)

        def by_anchor(anchor):
            return [c for c in checks if c.anchor == anchor]

        skipped = [c for c in checks if c.status is CheckStatus.SKIPPED_SINGULAR]
        assert _failures(checks) == []
        assert {c.anchor for c in skipped} <= {"inverse Gauss factors"}
        assert len(by_anchor("algebra homomorphisms")) == 3
        assert len(by_anchor("Gauss factors and map values")) == 21
        assert len(by_anchor("square roots in the untwisted gauge")) == 9
        assert len(by_anchor("rational twisted map")) == 3

    def test_structure_checks_rank_three(self):
        """Test rank three structure checks run to completion with entrywise inverse factors"""
        checks = structure_checks(3)
        inverse = [c for c in checks if c.anchor == "inverse Gauss factors"]
        dictionary = [c for c in checks if c.anchor == "Gauss factors and map values"]

        assert len(inverse) == 12
        assert all(c.status is CheckStatus.PASS for c in dictionary)
        assert len([c for c in checks if c.anchor == "Gauss decomposition"]) == 2
        assert _failures(checks) == []

    def test_task_groups(self):
        """Test the suite splits into independent check groups"""
        assert [task_id for task_id, _ in ybmap_tasks(2)] == [
            "oracle",
            "structure",
            "homomorphism",
            "set-ybe",
            "gauge",
        ]
        assert "set-ybe" not in [task_id for task_id, _ in ybmap_tasks(3)]

    def test_task_groups_respect_quantum_bound(self):
        """Test the task list is refused above the quantum bound"""
        with pytest.raises(ConfigurationError, match="quantum bound"):
            ybmap_tasks(4)

    def test_quantum_bound(self):
        """Test ranks above the quantum bound are refused"""
        with pytest.raises(ConfigurationError):
            verify_hopf_properties(4)

    def test_demo(self):
        """Test the quantum demo lists every map value"""
        text = demo_quantum_map(2)

        assert text.startswith("quantum Yang-Baxter map on the fundamental state, n=2")
        assert "L~+(1)_12 = " in text
        assert "L~-(2)_21 = " in text
