"""
Structured Logging Configuration
Log lines go to stderr so that stdout only carries report data
"""
import logging
import sys
from typing import Any

import structlog

from app.core.config import settings


def configure_logging() -> None:
    """Route stdlib and structlog output to stderr at LOG_LEVEL"""
    level = getattr(logging, settings.LOG_LEVEL)

    # uvicorn and fastapi log through the stdlib
    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=level)

    if settings.LOG_JSON:
        renderer = structlog.processors.JSONRenderer(sort_keys=True)
    else:
        renderer = structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty())

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.StackInfoRenderer(),
            structlog.dev.set_exc_info,
            structlog.processors.TimeStamper(fmt="ISO"),
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(level),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=True,
    )


def get_logger(name: str) -> structlog.BoundLogger:
    """
    Get a configured logger instance

    Args:
        name: Logger name (typically __name__)
    """
    return structlog.get_logger(name)


def bind_run_context(**fields: Any) -> None:
    """Attach fields (subcommand, source) to every log line of the current run"""
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(**{k: v for k, v in fields.items() if v is not None})


configure_logging()
