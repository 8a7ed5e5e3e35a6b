"""Structured logging configuration.

Events are key-value pairs rendered to stderr, so tables printed by the
command line stay clean on stdout. ``SFP_LOG_LEVEL`` and ``SFP_LOG_FORMAT``
(``console`` or ``json``) select the level and renderer used before
:func:`configure_logging` is called.
"""

import logging
import os
import sys
from typing import Optional

import structlog

_DEFAULT_LEVEL = "INFO"
_RENDERERS = ("console", "json")


def _processors(fmt: str) -> list:
    if fmt not in _RENDERERS:
        raise ValueError(f"Invalid log format: {fmt} (expected one of {', '.join(_RENDERERS)})")
    renderer = structlog.processors.JSONRenderer() if fmt == "json" else structlog.dev.ConsoleRenderer()
    return [
        structlog.contextvars.merge_contextvars,
        structlog.processors.add_log_level,
        structlog.processors.StackInfoRenderer(),
        structlog.dev.set_exc_info,
        structlog.processors.TimeStamper(fmt="iso"),
        renderer,
    ]


def _level_number(level: str) -> int:
    numeric_level = getattr(logging, level.upper(), None)
    if not isinstance(numeric_level, int):
        raise ValueError(f'Invalid log level: {level}')
    return numeric_level


class _Stderr:
    """Writes to whatever ``sys.stderr`` is at call time."""

    def write(self, text: str) -> int:
        return sys.stderr.write(text)

    def flush(self):
        sys.stderr.flush()


def _install(level: str, fmt: str):
    structlog.configure(
        processors=_processors(fmt),
        wrapper_class=structlog.make_filtering_bound_logger(_level_number(level)),
        context_class=dict,
        logger_factory=structlog.PrintLoggerFactory(file=_Stderr()),
        cache_logger_on_first_use=False,
    )


def get_logger(name: Optional[str] = None) -> structlog.BoundLogger:
    """Get a structured logger, configuring structlog on first use.

    Args:
        name: Logger name (typically __name__)

    Returns:
        structlog logger
    """
    if not structlog.is_configured():
        _install(
            os.environ.get("SFP_LOG_LEVEL", _DEFAULT_LEVEL),
            os.environ.get("SFP_LOG_FORMAT", "console"),
        )
    return structlog.get_logger(name)


def configure_logging(level: str = _DEFAULT_LEVEL, fmt: str = "console"):
    """Set the logging level and renderer.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        fmt: ``console`` for human-readable lines, ``json`` for one object per line
    """
    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=_level_number(level))
    _install(level, fmt)
