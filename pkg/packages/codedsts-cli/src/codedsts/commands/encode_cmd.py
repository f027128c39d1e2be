"""Encode command implementation."""

import typer
from codedsts_core.codec import CodeParams, encode, gft_context, pack_message
from codedsts_core.exceptions import CodedStsError
from codedsts_core.rcrm import PAYLOAD_BITS, rcrm_unpack
from rich.console import Console

from codedsts.utils.cli_context import code_panel, exit_with_error

console = Console()


def encode_message(
    field: int = typer.Option(631, "--field", "-D", help="Prime field order D"),
    n: int = typer.Option(14, "--n", "-N", min=1, help="Block length N (OFDM symbols)"),
    k: int = typer.Option(1, "--k", "-K", min=1, help="Message length K (field symbols)"),
    message: int = typer.Option(..., "--message", "-m", min=0, help="Message integer m"),
    rcrm: bool = typer.Option(
        False, "--rcrm", help="Also print the RCRM field breakdown of m"
    ),
) -> None:
    """
    Print the codeword of a message: one 0-based subcarrier index per OFDM symbol.
    """
    try:
        params = CodeParams.from_orders(field, n, k)
        codeword = encode(pack_message(message, params), gft_context(params))
        console.print(code_panel(params, {"Message": message}))
        typer.echo(str(codeword))

        if rcrm:
            if params.candidates < 2**PAYLOAD_BITS:
                console.print(
                    f"[yellow]RCRM breakdown needs D^K >= {2**PAYLOAD_BITS} "
                    f"(this code has {params.candidates} messages)[/yellow]"
                )
            elif message >= 2**PAYLOAD_BITS:
                console.print(
                    f"[yellow]m={message} is not an RCRM payload "
                    f"(payloads are {PAYLOAD_BITS} bits)[/yellow]"
                )
            else:
                typer.echo(str(rcrm_unpack(message)))
    except CodedStsError as e:
        exit_with_error(console, e)
