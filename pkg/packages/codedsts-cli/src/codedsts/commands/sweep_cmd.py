"""Sweep command implementation."""

import logging
from pathlib import Path
from typing import Any

import typer
from codedsts_core.exceptions import CodedStsError
from rich.console import Console
from rich.table import Table

from codedsts.simkit.export import export_csv
from codedsts.simkit.sweep import SweepResult, resolve_workers, run_sweep
from codedsts.utils.cli_context import exit_with_error, initialize_command, simulation_panel
from codedsts.utils.streaming_progress import SimpleProgress

console = Console()
logger = logging.getLogger(__name__)


def summary_table(result: SweepResult) -> Table:
    table = Table(title="Sweep results")
    table.add_column("SIR (dB)", justify="right", style="cyan")
    table.add_column("Erasure", justify="right")
    table.add_column("95% CI", justify="right")
    table.add_column("Error", justify="right")
    table.add_column("95% CI", justify="right")
    table.add_column("False accept", justify="right")
    table.add_column("Collisions", justify="right")
    for point in result.points:
        erasure_lo, erasure_hi = point.erasure_ci
        error_lo, error_hi = point.error_ci
        table.add_row(
            f"{point.sir_db:g}",
            f"{point.erasure_rate:.4g}",
            f"[{erasure_lo:.3g}, {erasure_hi:.3g}]",
            f"{point.error_rate:.4g}",
            f"[{error_lo:.3g}, {error_hi:.3g}]",
            f"{point.false_accept_rate:.4g}",
            str(point.tally.collisions),
        )
    return table


def sweep(
    config: Path = typer.Option(..., "--config", help="Experiment TOML file"),
    out: Path = typer.Option(Path("results.csv"), "--out", "-o", help="CSV output path"),
    seed: int | None = typer.Option(None, "--seed", min=0, help="Master seed"),
    trials: int | None = typer.Option(None, "--trials", min=1, help="Trials per SIR point"),
    workers: int | None = typer.Option(
        None, "--workers", "-w", min=0, help="Worker processes (0 = one per physical core)"
    ),
    progress: bool = typer.Option(True, "--progress/--no-progress", help="Show trial progress"),
) -> None:
    """
    Run the multi-user erasure/error experiment over the configured SIR points.

    Writes one CSV row per SIR point and prints a summary line for each.
    """
    overrides: dict[str, Any] = {}
    if seed is not None:
        overrides["master_seed"] = seed
    if trials is not None:
        overrides["trials"] = trials
    if workers is not None:
        overrides["workers"] = workers

    try:
        ctx = initialize_command(config_path=config, overrides=overrides)
        sim = ctx.simulation
        console.print(
            simulation_panel(ctx, {"Workers": resolve_workers(sim.workers), "Output": out})
        )

        reporter = (
            SimpleProgress(total=sim.trials * len(sim.sir_points), desc="Trials")
            if progress and sim.sir_points
            else None
        )
        result = run_sweep(sim, progress=reporter)
        export_csv(result, out)
    except CodedStsError as e:
        exit_with_error(console, e)

    console.print(summary_table(result))
    for point in result.points:
        typer.echo(
            f"sir_db={point.sir_db:g} erasure={point.erasure_rate:.6g} "
            f"error={point.error_rate:.6g} false_accept={point.false_accept_rate:.6g} "
            f"trials={point.trials}"
        )
    logger.info(f"Results written to {out}")
