"""
Tests for logging utilities
"""

import json
import logging
import sys

from ncyb.utils.logging import JsonLogFormatter, get_console_handler, setup_logger


class TestJsonLogFormatter:
    """Test stdlib records rendered as JSON lines"""

    def test_fields(self):
        formatter = JsonLogFormatter("%(timestamp)s %(level)s %(logger)s %(message)s")
        record = logging.LogRecord(
            "tenacity", logging.WARNING, __file__, 1, "retrying %s", ("draw",), None
        )

        payload = json.loads(formatter.format(record))

        assert payload["level"] == "warning"
        assert payload["logger"] == "tenacity"
        assert payload["event"] == "retrying draw"
        assert "timestamp" in payload

    def test_exception_included(self):
        formatter = JsonLogFormatter("%(message)s")
        try:
            raise ValueError("boom")
        except ValueError:
            record = logging.LogRecord(
                "ncyb", logging.ERROR, __file__, 1, "failed", (), sys.exc_info()
            )

        payload = json.loads(formatter.format(record))

        assert "ValueError: boom" in payload["exception"]


class TestSetupLogger:
    """Test the structlog factory"""

    def test_console_handler_writes_stderr(self):
        handler = get_console_handler()

        assert handler.stream is sys.stderr
        assert isinstance(handler.formatter, JsonLogFormatter)

    def test_logger_binds_context(self):
        logger = setup_logger("ncyb.tests").bind(suite="quasidet")

        logger.info("bound", n=2)
