"""
ncyb - Exact verification of quasi-determinant Yang-Baxter maps over U_q(gl(n))
"""

from ncyb.config import SuiteConfig, build_config
from ncyb.core.report import Check, CheckStatus, Report
from ncyb.core.runner import SuiteRunner
from ncyb.core.suites import run_suite

__version__ = "0.1.0"

__all__ = [
    "Check",
    "CheckStatus",
    "Report",
    "SuiteConfig",
    "SuiteRunner",
    "build_config",
    "run_suite",
]
