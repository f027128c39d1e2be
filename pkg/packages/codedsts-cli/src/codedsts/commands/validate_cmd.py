"""Validate command implementation."""

from pathlib import Path
from typing import Any

import typer
from codedsts_core.exceptions import CodedStsError
from rich.console import Console
from rich.table import Table

from codedsts.simkit.validation import DetectionReport, validate_detection
from codedsts.utils.cli_context import (
    EXIT_VALIDATION_FAILED,
    exit_with_error,
    initialize_command,
    simulation_panel,
)

console = Console()


def report_table(report: DetectionReport) -> Table:
    table = Table(title=f"Detection statistics at SIR {report.sir_db:g} dB")
    table.add_column("Check", style="cyan")
    table.add_column("n_rx", justify="right")
    table.add_column("n_user", justify="right")
    table.add_column("x", justify="right")
    table.add_column("Analytic", justify="right")
    table.add_column("Empirical", justify="right")
    table.add_column("z", justify="right")
    table.add_column("Result")
    for check in report.checks:
        table.add_row(
            check.kind.value,
            str(check.n_rx),
            str(check.n_user) if check.n_user else "-",
            f"{check.threshold:.6g}",
            f"{check.analytic:.6g}",
            f"{check.empirical:.6g}",
            f"{check.z:+.2f}",
            "[green]pass[/green]" if check.passed else "[red]FAIL[/red]",
        )
    return table


def validate(
    config: Path | None = typer.Option(None, "--config", help="Experiment TOML file"),
    samples: int | None = typer.Option(
        None, "--samples", min=1, help="Cells per check (default: validation_samples)"
    ),
    seed: int | None = typer.Option(None, "--seed", min=0, help="Master seed"),
    sir: float = typer.Option(-20.0, "--sir", help="SIR in dB setting the tone power"),
    threshold: float | None = typer.Option(
        None, "--threshold", min=0.0, help="Fixed energy threshold instead of target_far's"
    ),
    perturb: float = typer.Option(
        0.0,
        "--perturb",
        help="Relative error added to every analytic value (negative control)",
    ),
) -> None:
    """
    Compare Monte Carlo false-alarm and erasure rates with their closed forms.

    Exits 0 when every check lies within 3 binomial standard deviations, 1 otherwise.
    """
    overrides: dict[str, Any] = {}
    if seed is not None:
        overrides["master_seed"] = seed
    if samples is not None:
        overrides["validation_samples"] = samples

    try:
        ctx = initialize_command(config_path=config, overrides=overrides)
        sim = ctx.simulation
        console.print(
            simulation_panel(
                ctx,
                {
                    "Validation samples": sim.validation_samples,
                    "Validation n_rx": sim.validation_n_rx,
                    "Validation n_user": sim.validation_n_users,
                },
            )
        )
        report = validate_detection(sim, sir, perturb=perturb, threshold=threshold)
    except CodedStsError as e:
        exit_with_error(console, e)

    console.print(report_table(report))
    if not report.passed:
        failed = sum(1 for check in report.checks if not check.passed)
        console.print(f"[bold red]{failed} check(s) outside 3 sigma[/bold red]")
        raise typer.Exit(code=EXIT_VALIDATION_FAILED)
    console.print("[bold green]All checks within 3 sigma[/bold green]")
