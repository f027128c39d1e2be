"""Offset command implementation."""

import typer
from codedsts_core.codec import (
    CodeParams,
    correct_offset,
    estimate_offset,
    extract_message,
    gft_context,
    is_valid_codeword,
)
from codedsts_core.exceptions import CodedStsError, DimensionMismatchError, InvalidParameterError
from rich.console import Console

from codedsts.utils.cli_context import code_panel, exit_with_error

console = Console()


def parse_indices(text: str) -> list[int]:
    """Whitespace-separated integers."""
    try:
        return [int(token) for token in text.split()]
    except ValueError as e:
        raise typer.BadParameter(f"expected whitespace-separated integers: {text!r}") from e


def recover_offset(
    field: int = typer.Option(631, "--field", "-D", help="Prime field order D"),
    n: int = typer.Option(14, "--n", "-N", min=1, help="Block length N (OFDM symbols)"),
    k: int = typer.Option(1, "--k", "-K", min=1, help="Message length K (field symbols)"),
    codeword: str = typer.Option(
        ..., "--codeword", "-c", help='Received tone indices, e.g. "2 3 0 4"'
    ),
) -> None:
    """
    Estimate the frequency offset of a received codeword and undo it.

    Prints the offset with the corrected codeword and its message, or INVALID when
    the corrected vector is not a codeword.
    """
    tones = parse_indices(codeword)
    try:
        params = CodeParams.from_orders(field, n, k)
        if len(tones) != params.n:
            raise DimensionMismatchError(params.n, len(tones))
        for tone in tones:
            if not 0 <= tone < params.order:
                raise InvalidParameterError("codeword", tone, f"must lie in [0, {params.order})")

        ctx = gft_context(params)
        delta = estimate_offset(tones, ctx)
        corrected = correct_offset(tones, delta)
        console.print(code_panel(params, {"Received": " ".join(map(str, tones))}))

        if not is_valid_codeword(corrected, params):
            typer.echo(f"delta={delta} INVALID")
            return

        msg = extract_message(corrected, ctx)
        typer.echo(f"delta={delta} codeword={corrected} m={msg.m}")
    except CodedStsError as e:
        exit_with_error(console, e)
