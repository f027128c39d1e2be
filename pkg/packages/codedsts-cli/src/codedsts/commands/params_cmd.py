"""Params command implementation."""

import json
from pathlib import Path
from typing import Any

import typer
from codedsts_core.codec import CodeParams, separability_bound, smallest_compatible_prime
from codedsts_core.decoder import DecoderConfig
from codedsts_core.exceptions import (
    BlockLengthIncompatibleError,
    CodedStsError,
    NonPrimeModulusError,
)
from codedsts_core.phy.detection import threshold_for_far
from rich.console import Console
from rich.table import Table

from codedsts.utils.cli_context import EXIT_USAGE, code_panel, exit_with_error, initialize_command
from codedsts.utils.logging import SuppressLoggingContext

console = Console()


def derived_quantities(
    params: CodeParams, n_rx: int, noise_var: float, target_far: float
) -> dict[str, Any]:
    """Everything an experiment config implies about the code and the detector."""
    return {
        "field_order": params.order,
        "primitive_element": params.field.alpha,
        "block_length": params.n,
        "message_length": params.k,
        "messages": params.candidates,
        "t": params.t,
        "rho": params.rho,
        "separability_bound": separability_bound(params.n, params.k, params.order),
        "default_tau": DecoderConfig.default_for(params).tau,
        "n_rx": n_rx,
        "noise_var": noise_var,
        "target_far": target_far,
        "threshold": threshold_for_far(target_far, noise_var, n_rx),
    }


def show_params(
    config: Path | None = typer.Option(
        None, "--config", help="Experiment TOML file providing the defaults"
    ),
    field: int | None = typer.Option(None, "--field", "-D", help="Prime field order D"),
    n: int | None = typer.Option(None, "--n", "-N", min=1, help="Block length N"),
    k: int | None = typer.Option(None, "--k", "-K", min=1, help="Message length K"),
    n_rx: int | None = typer.Option(None, "--n-rx", min=1, help="Receive antennas"),
    target_far: float | None = typer.Option(
        None, "--target-far", min=0.0, max=1.0, help="False-alarm design point"
    ),
    as_json: bool = typer.Option(False, "--json", help="Print machine-readable JSON"),
) -> None:
    """
    Show derived code and detector quantities: t, rho, separability bound, threshold x.

    When N does not divide D-1, or D is not prime, suggests the smallest compatible prime.
    """
    try:
        ctx = initialize_command(config_path=config, enable_logging=not as_json)
        sim = ctx.simulation
        field_order = field if field is not None else sim.field_order
        block_length = n if n is not None else sim.block_length
        message_length = k if k is not None else sim.message_length
        antennas = n_rx if n_rx is not None else sim.n_rx
        far = target_far if target_far is not None else sim.target_far

        try:
            params = CodeParams.from_orders(field_order, block_length, message_length)
        except (BlockLengthIncompatibleError, NonPrimeModulusError) as e:
            suggestion = smallest_compatible_prime(block_length, minimum=field_order)
            console.print(f"[bold red]Error:[/bold red] {e}")
            console.print(
                f"Smallest compatible prime >= {field_order}: [green]{suggestion}[/green]"
            )
            raise typer.Exit(code=EXIT_USAGE) from e

        values = derived_quantities(params, antennas, sim.noise_var, far)
    except CodedStsError as e:
        exit_with_error(console, e)

    if as_json:
        with SuppressLoggingContext():
            typer.echo(json.dumps(values, indent=2))
        return

    console.print(code_panel(params))
    table = Table(title="Derived quantities")
    table.add_column("Quantity", style="cyan")
    table.add_column("Value", justify="right")
    for key, value in values.items():
        table.add_row(key, f"{value:.6g}" if isinstance(value, float) else str(value))
    console.print(table)
