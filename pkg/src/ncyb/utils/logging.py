"""
Logging utilities for ncyb

Everything goes to stderr as JSON lines; stdout is reserved for reports.
"""

import logging
import sys

import structlog
from pydantic import ValidationError
from pythonjsonlogger import jsonlogger

_configured = False


def _level() -> int:
    from ncyb.config import get_settings

    try:
        name = get_settings().log_level.upper()
    except ValidationError:
        # bad NCYB_* values surface later as configuration errors
        return logging.WARNING
    level = logging.getLevelName(name)
    return level if isinstance(level, int) else logging.WARNING


def configure_logging() -> None:
    """Route structlog and stdlib records (asyncio, tenacity) to stderr at NCYB_LOG_LEVEL."""
    global _configured
    if _configured:
        return
    level = _level()
    logging.basicConfig(handlers=[get_console_handler()], level=level)
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.StackInfoRenderer(),
            structlog.dev.set_exc_info,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.JSONRenderer(),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(level),
        context_class=dict,
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=True,
    )
    _configured = True


def setup_logger(name: str) -> structlog.BoundLogger:
    """Module logger; the first call configures the process."""
    configure_logging()
    return structlog.get_logger(name)


class JsonLogFormatter(jsonlogger.JsonFormatter):
    """Stdlib records in the same shape as structlog events"""

    def add_fields(self, log_record: dict, record: logging.LogRecord, message_dict: dict) -> None:
        super().add_fields(log_record, record, message_dict)
        log_record["timestamp"] = self.formatTime(record, self.datefmt)
        log_record["level"] = record.levelname.lower()
        log_record["logger"] = record.name
        log_record.setdefault("event", record.getMessage())
        if record.exc_info:
            log_record["exception"] = self.formatException(record.exc_info)


def get_console_handler() -> logging.Handler:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(JsonLogFormatter("%(timestamp)s %(level)s %(logger)s %(message)s"))
    return handler
