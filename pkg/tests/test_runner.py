"""
Tests for the suite runner
"""

import time
from unittest.mock import Mock

import pytest

from ncyb.config import SuiteConfig
from ncyb.core.report import CheckStatus, failed, passed
from ncyb.core.runner import SuiteRunner, TaskStatus
from ncyb.utils.exceptions import ConfigurationError, SingularQuasiDet, SuiteError


@pytest.fixture
def config():
    """Small suite config"""
    return SuiteConfig(suite="appendixB", n=2, seed=3)


@pytest.fixture
def passing_task():
    """Task returning one passing check"""
    return Mock(return_value=[passed("ok", "anchor")])


class TestSuiteRunner:
    """Test runner functionality"""

    def test_runner_creation(self, config):
        """Test runner can be created"""
        runner = SuiteRunner(config, threads=2)

        assert runner.config.suite == "appendixB"
        assert runner.threads == 2
        assert len(runner.tasks) == 0
        assert runner.run_id

    def test_add_task(self, config, passing_task):
        """Test adding tasks to the runner"""
        runner = SuiteRunner(config)

        runner.add_task("t1", passing_task, anchor="qexp")

        assert "t1" in runner.tasks
        assert runner.tasks["t1"].anchor == "qexp"
        assert runner.tasks["t1"].status == TaskStatus.PENDING

    def test_anchor_defaults_to_task_id(self, config, passing_task):
        """Test anchor falls back to the task id"""
        runner = SuiteRunner(config).add_task("t1", passing_task)

        assert runner.tasks["t1"].anchor == "t1"

    def test_add_duplicate_task_raises_error(self, config, passing_task):
        """Test adding a duplicate task raises error"""
        runner = SuiteRunner(config)
        runner.add_task("t1", passing_task)

        with pytest.raises(SuiteError, match="already registered"):
            runner.add_task("t1", passing_task)

    @pytest.mark.asyncio
    async def test_execute_empty_raises_error(self, config):
        """Test executing with no tasks raises error"""
        with pytest.raises(SuiteError, match="has no tasks"):
            await SuiteRunner(config).execute()

    @pytest.mark.asyncio
    async def test_execute_single_task(self, config, passing_task):
        """Test executing a single task"""
        runner = SuiteRunner(config).add_task("t1", passing_task)

        report = await runner.execute()

        assert report.status == "pass"
        assert report.suite == "appendixB"
        assert [c.name for c in report.checks] == ["ok"]
        assert runner.tasks["t1"].status == TaskStatus.COMPLETED
        passing_task.assert_called_once()

    @pytest.mark.asyncio
    async def test_records_keep_registration_order(self, config):
        """Test records follow registration order, not completion order"""

        def slow():
            time.sleep(0.05)
            return [passed("slow", "a")]

        runner = SuiteRunner(config, threads=2)
        runner.add_task("slow", slow)
        runner.add_task("fast", lambda: [passed("fast", "a")])

        report = await runner.execute()

        assert [c.name for c in report.checks] == ["slow", "fast"]

    @pytest.mark.asyncio
    async def test_failed_check_fails_report(self, config):
        """Test a failing check fails the report"""
        runner = SuiteRunner(config)
        runner.add_task("t1", lambda: [passed("a", "x"), failed("b", "x", {"lhs": "1"})])

        report = await runner.execute()

        assert report.status == "fail"
        assert report.counts()["fail"] == 1

    @pytest.mark.asyncio
    async def test_singular_task_becomes_skipped(self, config):
        """Test a singular minor becomes a skipped record"""

        def singular():
            raise SingularQuasiDet("pivot vanished", rows=(1, 2), cols=(1, 2), i=1, j=1)

        runner = SuiteRunner(config).add_task("t1", singular, anchor="qd")

        report = await runner.execute()

        assert report.status == "pass"
        (check,) = report.checks
        assert check.status is CheckStatus.SKIPPED_SINGULAR
        assert check.anchor == "qd"
        assert check.detail["minor"]["rows"] == ["1", "2"]

    @pytest.mark.asyncio
    async def test_task_error_wrapped(self, config):
        """Test an unexpected error becomes a SuiteError"""

        def broken():
            raise ValueError("boom")

        runner = SuiteRunner(config).add_task("t1", broken)

        with pytest.raises(SuiteError, match="Task t1 failed: boom"):
            await runner.execute()
        assert runner.tasks["t1"].status == TaskStatus.FAILED
        assert runner.tasks["t1"].error == "boom"

    @pytest.mark.asyncio
    async def test_configuration_error_propagates(self, config):
        """Test configuration errors are not wrapped"""

        def misconfigured():
            raise ConfigurationError("n too large")

        runner = SuiteRunner(config).add_task("t1", misconfigured)

        with pytest.raises(ConfigurationError, match="n too large"):
            await runner.execute()

    def test_execution_history(self, config, passing_task):
        """Test execution history is recorded"""
        runner = SuiteRunner(config)
        runner.add_task("t1", passing_task)
        runner.add_task("t2", passing_task)

        report = runner.run()

        assert report.status == "pass"
        assert {h["task_id"] for h in runner.execution_history} == {"t1", "t2"}
        assert all(h["status"] == "completed" for h in runner.execution_history)
        assert report.config["seed"] == 3
