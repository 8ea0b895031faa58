"""
Tests for the suite registry
"""

import pytest

from ncyb.config import SUITE_NAMES, build_config
from ncyb.core.rng import ResampleLog
from ncyb.core.suites import register, registered, run_suite, suite_tasks, symbolic_matrix
from ncyb.utils.exceptions import ConfigurationError, SuiteError


class TestRegistry:
    """Test suite registration"""

    def test_every_suite_registered(self):
        assert registered() == list(SUITE_NAMES)

    def test_register_unknown_suite(self):
        with pytest.raises(SuiteError, match="unknown suite"):
            register("nosuch")(lambda config, log: [])

    def test_symbolic_matrix_shape(self):
        assert symbolic_matrix(3).shape == (3, 3)


class TestSuiteTasks:
    """Test task lists built from configs"""

    def test_quasidet_samples(self):
        config = build_config("quasidet", n=3, samples=5)

        ids = [task_id for task_id, _ in suite_tasks(config, ResampleLog())]

        assert ids == [f"sample-{s}" for s in range(5)]

    def test_quasidet_symbolic_sizes(self):
        config = build_config("quasidet", n=3, mode="symbolic")

        ids = [task_id for task_id, _ in suite_tasks(config, ResampleLog())]

        assert ids == ["symbolic-2", "symbolic-3"]

    def test_quasidet_symbolic_bound(self):
        config = build_config("quasidet", n=5, mode="symbolic")

        with pytest.raises(ConfigurationError, match="symbolic bound"):
            suite_tasks(config, ResampleLog())

    def test_all_prefixes_task_ids(self):
        config = build_config("all", n=2, samples=2)

        ids = [task_id for task_id, _ in suite_tasks(config, ResampleLog())]

        assert ids
        assert all("/" in task_id for task_id in ids)
        assert any(task_id.startswith("appendixB/") for task_id in ids)

    def test_all_keeps_suite_sample_defaults(self):
        config = build_config("all", n=2)

        ids = [task_id for task_id, _ in suite_tasks(config, ResampleLog())]

        assert sum(task_id.startswith("quasidet/sample-") for task_id in ids) == 200

    def test_all_forwards_explicit_samples(self):
        config = build_config("all", n=2, samples=3)

        ids = [task_id for task_id, _ in suite_tasks(config, ResampleLog())]

        assert sum(task_id.startswith("quasidet/sample-") for task_id in ids) == 3


class TestRunSuite:
    """Test complete runs"""

    def test_appendix_b_records_resampling(self):
        report = run_suite(build_config("appendixB", trunc_order=6))

        assert report.status == "pass"
        assert report.config["resampling"]["attempts"] >= 0

    def test_quasidet_numeric_run(self):
        report = run_suite(build_config("quasidet", n=3, samples=4, seed=2))

        assert report.status == "pass"
        assert report.checks

    def test_deterministic_in_seed(self):
        first = run_suite(build_config("quasidet", n=2, samples=2, seed=9))
        second = run_suite(build_config("quasidet", n=2, samples=2, seed=9))

        assert [c.to_dict() for c in first.checks] == [c.to_dict() for c in second.checks]
