"""Logging configuration for CodedSTS."""

import json
import logging
import os
import sys
from typing import Any, TextIO

from codedsts.config.schema import LoggingConfig

PACKAGES = ("codedsts", "codedsts_core")


class JsonLineFormatter(logging.Formatter):
    """One JSON object per record."""

    def format(self, record: logging.LogRecord) -> str:
        payload = {
            "timestamp": self.formatTime(record),
            "level": record.levelname,
            "module": record.name,
            "message": record.getMessage(),
        }
        if record.exc_info:
            payload["exception"] = self.formatException(record.exc_info)
        return json.dumps(payload)


def setup_logging(config: LoggingConfig) -> None:
    """
    Configure the CLI and core package loggers with one shared handler.

    Args:
        config: Logging configuration
    """
    handler: logging.FileHandler | logging.StreamHandler[Any]
    handler = (
        logging.FileHandler(config.file) if config.file else logging.StreamHandler[Any](sys.stderr)
    )

    if config.format == "json":
        handler.setFormatter(JsonLineFormatter())
    else:
        handler.setFormatter(
            logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
        )

    for package in PACKAGES:
        logger = logging.getLogger(package)
        logger.setLevel(config.level)

        for old_handler in logger.handlers[:]:
            old_handler.close()
            logger.removeHandler(old_handler)

        logger.addHandler(handler)
        # Avoid duplicate lines through the root logger
        logger.propagate = False


class SuppressLoggingContext:
    """Silence all logging and stderr while machine-readable output is produced.

    Example:
        >>> with SuppressLoggingContext():
        ...     typer.echo(json.dumps(report))
    """

    def __init__(self) -> None:
        self.original_stderr: TextIO = sys.stderr
        self.original_disable_level = logging.root.manager.disable

    def __enter__(self) -> "SuppressLoggingContext":
        logging.disable(logging.CRITICAL)
        sys.stderr = open(os.devnull, "w")
        return self

    def __exit__(
        self,
        _exc_type: type[BaseException] | None,
        _exc_val: BaseException | None,
        _exc_tb: object,
    ) -> None:
        sys.stderr.close()
        sys.stderr = self.original_stderr
        logging.disable(self.original_disable_level)
