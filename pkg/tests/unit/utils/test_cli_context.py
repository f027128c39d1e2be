"""Tests for command initialization helpers."""

import pytest
import typer
from codedsts.utils.cli_context import (
    EXIT_IO,
    EXIT_USAGE,
    code_panel,
    exit_with_error,
    initialize_command,
    simulation_panel,
)
from codedsts_core.codec import CodeParams
from codedsts_core.exceptions import ConfigurationError, ResultExportError
from rich.console import Console


@pytest.fixture
def console() -> Console:
    return Console(record=True, width=120)


class TestInitializeCommand:
    def test_defaults_without_file(self):
        ctx = initialize_command(enable_logging=False)
        assert ctx.config_path is None
        assert ctx.simulation.field_order == 631

    def test_overrides_apply_to_simulation(self, write_config):
        path = write_config(trials=10)
        ctx = initialize_command(config_path=path, overrides={"trials": 2}, enable_logging=False)
        assert ctx.simulation.trials == 2
        assert ctx.config_path == path

    def test_fresh_settings_each_call(self, write_config):
        first = initialize_command(config_path=write_config("a.toml", users=2))
        second = initialize_command(config_path=write_config("b.toml", users=5))
        assert (first.simulation.users, second.simulation.users) == (2, 5)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigurationError):
            initialize_command(config_path=tmp_path / "absent.toml")


class TestPanels:
    def test_code_panel(self, console):
        console.print(code_panel(CodeParams.from_orders(5, 4, 1), {"Message": 1}))
        text = console.export_text()
        assert "(4, 1) over GF(5)" in text
        assert "t=1  rho=3" in text
        assert "Message: 1" in text

    def test_simulation_panel(self, console, write_config):
        ctx = initialize_command(config_path=write_config(sir_points=[-20.0, -18.0]))
        console.print(simulation_panel(ctx, {"Workers": 2}))
        text = console.export_text()
        assert "SIR points (dB): -20, -18" in text
        assert "Workers: 2" in text
        assert "experiment.toml" in text


class TestExitWithError:
    def test_usage_error(self, console):
        with pytest.raises(typer.Exit) as exc_info:
            exit_with_error(console, ConfigurationError("bad"))
        assert exc_info.value.exit_code == EXIT_USAGE
        assert "Error: bad" in console.export_text()

    def test_io_error(self, console):
        with pytest.raises(typer.Exit) as exc_info:
            exit_with_error(console, ResultExportError("out.csv", "disk full"))
        assert exc_info.value.exit_code == EXIT_IO
