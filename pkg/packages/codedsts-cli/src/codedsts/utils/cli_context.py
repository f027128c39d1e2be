"""CLI command initialization helpers.

Centralizes configuration loading, logging setup, the resolved-configuration
panel every command prints first, and the mapping from errors to exit codes.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Any, NoReturn

import typer
from codedsts_core.codec import CodeParams
from codedsts_core.exceptions import CodedStsError, ResultExportError
from rich.console import Console
from rich.panel import Panel

from codedsts.config.schema import Config, SimConfig
from codedsts.config.settings import get_settings, reset_settings
from codedsts.utils.logging import setup_logging

EXIT_VALIDATION_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


@dataclass
class CommandContext:
    """Container for an initialized experiment command."""

    config: Config
    """Merged configuration (defaults, file, environment, flags)."""

    config_path: Path | None = None
    """Experiment file the configuration came from, if any."""

    @property
    def simulation(self) -> SimConfig:
        return self.config.simulation


def initialize_command(
    config_path: Path | None = None,
    overrides: dict[str, Any] | None = None,
    enable_logging: bool = True,
) -> CommandContext:
    """Load configuration for a command and set up logging.

    Args:
        config_path: Experiment TOML file (falls back to CODEDSTS_CONFIG)
        overrides: Simulation keys set from command-line flags
        enable_logging: Whether to configure logging (False for JSON output)

    Raises:
        ConfigurationError: If the file is missing or the merged values are invalid
    """
    reset_settings()  # fresh settings for each invocation
    cli_overrides = {"simulation": overrides} if overrides else {}
    settings = get_settings(cli_overrides=cli_overrides, config_path=config_path)
    config = settings.load()

    if enable_logging:
        setup_logging(config.logging)

    return CommandContext(config=config, config_path=settings.resolve_config_path())


def code_panel(params: CodeParams, extra: dict[str, Any] | None = None) -> Panel:
    lines = [
        f"Code: [cyan]{params}[/cyan]",
        f"Primitive element: {params.field.alpha}",
        f"t={params.t}  rho={params.rho}",
    ]
    lines.extend(f"{key}: {value}" for key, value in (extra or {}).items())
    return Panel.fit("\n".join(lines), title="Configuration", border_style="blue")


def simulation_panel(ctx: CommandContext, extra: dict[str, Any] | None = None) -> Panel:
    sim = ctx.simulation
    source = str(ctx.config_path) if ctx.config_path else "defaults"
    lines = [
        f"Source: {source}",
        f"Code: [cyan]{sim.code_params}[/cyan]  S={sim.resolved_subcarriers}",
        f"Users: {sim.users} ({sim.scenario.value})  tau={sim.decoder_config().tau}",
        f"Receiver: n_rx={sim.n_rx} n_tx={sim.n_tx} noise_var={sim.noise_var} "
        f"fading={sim.fading.value} correlation={sim.fading_correlation}",
        f"Target FAR: {sim.target_far}",
        f"SIR points (dB): {', '.join(f'{v:g}' for v in sim.sir_points) or '-'}",
        f"Trials: {sim.trials}  Seed: {sim.master_seed}",
    ]
    lines.extend(f"{key}: {value}" for key, value in (extra or {}).items())
    return Panel.fit("\n".join(lines), title="Configuration", border_style="blue")


def exit_with_error(console: Console, error: CodedStsError) -> NoReturn:
    """Print the error and exit 3 for result I/O failures, 2 for everything else."""
    console.print(f"[bold red]Error:[/bold red] {error}")
    code = EXIT_IO if isinstance(error, ResultExportError) else EXIT_USAGE
    raise typer.Exit(code=code)
