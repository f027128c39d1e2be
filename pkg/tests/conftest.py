"""Pytest configuration for tests.

With UV workspace editable installs, all packages are properly installed
and importable. No sys.path manipulation needed.
"""

import logging
from collections.abc import Callable, Iterator
from pathlib import Path
from typing import Any

import pytest
import toml
from codedsts.config.settings import reset_settings
from codedsts.utils.logging import PACKAGES

ENV_VARS = (
    "CODEDSTS_CONFIG",
    "CODEDSTS_SEED",
    "CODEDSTS_TRIALS",
    "CODEDSTS_WORKERS",
    "CODEDSTS_LOG_LEVEL",
)


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """Every test starts from defaults: no CODEDSTS_* variables, no cached settings."""
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)
    reset_settings()
    yield
    reset_settings()
    # Commands attach handlers to CliRunner streams that are closed afterwards
    for package in PACKAGES:
        logger = logging.getLogger(package)
        for handler in logger.handlers[:]:
            handler.close()
            logger.removeHandler(handler)
        logger.propagate = True


@pytest.fixture
def write_config(tmp_path: Path) -> Callable[..., Path]:
    """Write an experiment TOML file and return its path."""

    def _write(name: str = "experiment.toml", **values: Any) -> Path:
        path = tmp_path / name
        path.write_text(toml.dumps(values))
        return path

    return _write
