"""
Suite runner for ncyb
"""

import asyncio
import time
import uuid
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional

from ncyb.config import SuiteConfig, get_settings
from ncyb.core.report import Check, Report, skipped
from ncyb.core.rng import SINGULAR_ERRORS
from ncyb.utils.exceptions import ConfigurationError, SuiteError
from ncyb.utils.logging import setup_logger

logger = setup_logger(__name__)

Task = Callable[[], List[Check]]


class TaskStatus(Enum):
    """Task execution status"""
    PENDING = "pending"
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"


@dataclass
class SuiteTask:
    """One registered unit of work"""
    task_id: str
    fn: Task
    anchor: str = ""
    status: TaskStatus = TaskStatus.PENDING
    checks: List[Check] = field(default_factory=list)
    error: Optional[str] = None
    elapsed_ms: int = 0


class SuiteRunner:
    """
    Runs the tasks of one suite

    Tasks go to worker threads through asyncio.to_thread, at most `threads` at a
    time. Records are assembled in registration order whatever the completion
    order, so reports are deterministic.
    """

    def __init__(self, config: SuiteConfig, threads: Optional[int] = None):
        self.config = config
        self.run_id = str(uuid.uuid4())
        self.threads = threads or get_settings().threads
        self.tasks: Dict[str, SuiteTask] = {}
        self.logger = logger.bind(run_id=self.run_id, suite=config.suite, n=config.n)
        self.execution_history: List[Dict[str, Any]] = []

    def add_task(self, task_id: str, fn: Task, anchor: str = "") -> "SuiteRunner":
        """Register a task; ids must be unique"""
        if task_id in self.tasks:
            raise SuiteError(f"Task {task_id} already registered")
        self.tasks[task_id] = SuiteTask(task_id=task_id, fn=fn, anchor=anchor or task_id)
        self.logger.debug("added task", task=task_id)
        return self

    async def execute(self) -> Report:
        """Run every task and assemble the report"""
        if not self.tasks:
            raise SuiteError(f"Suite {self.config.suite} has no tasks")
        self.logger.info("starting suite", tasks=len(self.tasks), threads=self.threads)
        start = time.perf_counter()
        semaphore = asyncio.Semaphore(self.threads)

        async def bounded(task: SuiteTask) -> None:
            async with semaphore:
                await self._execute_task(task)

        await asyncio.gather(*(bounded(t) for t in self.tasks.values()))

        report = Report(self.config.suite, self.config.echo())
        for task in self.tasks.values():
            report.extend(task.checks)
        report.elapsed_ms = int((time.perf_counter() - start) * 1000)
        self.logger.info("suite finished", status=report.status, **report.counts())
        return report

    def run(self) -> Report:
        """Blocking entry point"""
        return asyncio.run(self.execute())

    async def _execute_task(self, task: SuiteTask) -> None:
        """Run one task in a worker thread; singular minors become skipped records"""
        task.status = TaskStatus.RUNNING
        start = time.perf_counter()
        try:
            task.checks = list(await asyncio.to_thread(task.fn))
            task.status = TaskStatus.COMPLETED
        except SINGULAR_ERRORS as e:
            task.checks = [skipped(task.task_id, task.anchor, e)]
            task.status = TaskStatus.COMPLETED
            self.logger.info("task hit a singular minor", task=task.task_id, reason=str(e))
        except (ConfigurationError, SuiteError):
            task.status = TaskStatus.FAILED
            raise
        except Exception as e:
            task.status = TaskStatus.FAILED
            task.error = str(e)
            self.logger.error("task failed", task=task.task_id, error=str(e), exc_info=True)
            raise SuiteError(f"Task {task.task_id} failed: {e}") from e
        finally:
            task.elapsed_ms = int((time.perf_counter() - start) * 1000)
            self.execution_history.append(
                {
                    "task_id": task.task_id,
                    "status": task.status.value,
                    "checks": len(task.checks),
                    "elapsed_ms": task.elapsed_ms,
                }
            )
