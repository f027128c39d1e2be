"""Version command implementation."""

import platform

import codedsts_core
from rich.console import Console
from rich.panel import Panel

from codedsts import __version__

console = Console()


def version() -> None:
    """Show CodedSTS version information."""
    console.print(
        Panel.fit(
            "[bold blue]CodedSTS[/bold blue] - Coded single-tone signaling simulator\n"
            f"Version: [green]{__version__}[/green]\n"
            f"Core: [green]{codedsts_core.__version__}[/green]\n"
            f"Python: [yellow]{platform.python_version()}[/yellow]",
            border_style="blue",
        )
    )
