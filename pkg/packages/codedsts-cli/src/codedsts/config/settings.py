"""Configuration management for CodedSTS."""

import os
from pathlib import Path
from typing import Any

import toml
from codedsts_core.exceptions import ConfigurationError
from pydantic import ValidationError

from codedsts.config.schema import Config

SECTION_LOGGING = "logging"


def deep_merge(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    """Merge override into base recursively."""
    result = base.copy()
    for key, value in override.items():
        if key in result and isinstance(result[key], dict) and isinstance(value, dict):
            result[key] = deep_merge(result[key], value)
        else:
            result[key] = value
    return result


def load_toml(path: Path) -> dict[str, Any]:
    """Load TOML file."""
    if not path.exists():
        raise ConfigurationError(f"Config file not found: {path}")
    try:
        with path.open() as f:
            return toml.load(f)
    except Exception as e:
        raise ConfigurationError(f"Failed to load {path}: {e}") from e


def nest_file_config(raw: dict[str, Any]) -> dict[str, Any]:
    """Experiment files keep simulation keys at the top level next to a [logging] table."""
    nested: dict[str, Any] = {}
    simulation = {key: value for key, value in raw.items() if key != SECTION_LOGGING}
    if simulation:
        nested["simulation"] = simulation
    if SECTION_LOGGING in raw:
        nested[SECTION_LOGGING] = raw[SECTION_LOGGING]
    return nested


def _env_int(name: str) -> int | None:
    value = os.getenv(name)
    if value is None or value == "":
        return None
    try:
        return int(value)
    except ValueError as e:
        raise ConfigurationError(f"{name} must be an integer, got {value!r}") from e


def load_from_env() -> dict[str, Any]:
    """Load configuration from environment variables."""
    config: dict[str, Any] = {}

    if (seed := _env_int("CODEDSTS_SEED")) is not None:
        config.setdefault("simulation", {})["master_seed"] = seed

    if (trials := _env_int("CODEDSTS_TRIALS")) is not None:
        config.setdefault("simulation", {})["trials"] = trials

    if (workers := _env_int("CODEDSTS_WORKERS")) is not None:
        config.setdefault("simulation", {})["workers"] = workers

    if level := os.getenv("CODEDSTS_LOG_LEVEL"):
        config.setdefault("logging", {})["level"] = level.upper()

    return config


class Settings:
    """Configuration loader with priority: CLI > ENV > config file > Defaults."""

    def __init__(
        self,
        cli_overrides: dict[str, Any] | None = None,
        config_path: Path | None = None,
    ) -> None:
        self.cli_overrides = cli_overrides or {}
        self.config_path = config_path
        self._config: Config | None = None

    def resolve_config_path(self) -> Path | None:
        """--config wins; CODEDSTS_CONFIG is the fallback used for test isolation."""
        if self.config_path is not None:
            return self.config_path
        if config_env_path := os.getenv("CODEDSTS_CONFIG"):
            return Path(config_env_path)
        return None

    def load(self) -> Config:
        """Load and merge configuration from all sources."""
        if self._config:
            return self._config

        config_dict: dict[str, Any] = {}

        # 1. Experiment file
        if path := self.resolve_config_path():
            config_dict = deep_merge(config_dict, nest_file_config(load_toml(path)))

        # 2. Environment variables
        config_dict = deep_merge(config_dict, load_from_env())

        # 3. CLI overrides
        config_dict = deep_merge(config_dict, self.cli_overrides)

        try:
            self._config = Config(**config_dict)
        except ValidationError as e:
            raise ConfigurationError(f"Invalid configuration: {e}") from e

        return self._config

    @property
    def config(self) -> Config:
        if not self._config:
            return self.load()
        return self._config


_settings: Settings | None = None


def get_settings(
    cli_overrides: dict[str, Any] | None = None,
    config_path: Path | None = None,
) -> Settings:
    global _settings
    if not _settings:
        _settings = Settings(cli_overrides, config_path)
    return _settings


def reset_settings() -> None:
    """Reset cached settings (for testing)."""
    global _settings
    _settings = None
