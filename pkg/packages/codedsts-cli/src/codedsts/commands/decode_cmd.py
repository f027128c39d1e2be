"""Decode command implementation."""

import typer
from codedsts_core.codec import CodeParams
from codedsts_core.decoder import DecoderConfig, decode_multiuser
from codedsts_core.exceptions import CodedStsError
from codedsts_core.phy.detection import DetectionGrid
from codedsts_core.rcrm import PAYLOAD_BITS, rcrm_unpack
from rich.console import Console

from codedsts.commands.offset_cmd import parse_indices
from codedsts.utils.cli_context import code_panel, exit_with_error

console = Console()


def decode_detections(
    field: int = typer.Option(631, "--field", "-D", help="Prime field order D"),
    n: int = typer.Option(14, "--n", "-N", min=1, help="Block length N (OFDM symbols)"),
    k: int = typer.Option(1, "--k", "-K", min=1, help="Message length K (field symbols)"),
    detections: str = typer.Option(
        ...,
        "--detections",
        "-d",
        help='Detected subcarriers per OFDM symbol, symbols separated by ";" e.g. "1 5;2;4 0;3"',
    ),
    tau: int | None = typer.Option(
        None, "--tau", min=1, help="Acceptance threshold (default: ceil(N/2) for K=1, else N)"
    ),
    subcarriers: int | None = typer.Option(
        None, "--subcarriers", "-S", min=1, help="Subcarrier count S (default: D)"
    ),
    rcrm: bool = typer.Option(False, "--rcrm", help="Print the RCRM fields of each message"),
) -> None:
    """
    List every message whose codeword tones appear in at least tau detected sets.
    """
    sets = [parse_indices(symbol) for symbol in detections.split(";")]
    try:
        params = CodeParams.from_orders(field, n, k)
        cfg = DecoderConfig.default_for(params) if tau is None else DecoderConfig(tau=tau)
        grid = DetectionGrid.from_sets(subcarriers or params.order, sets)
        console.print(code_panel(params, {"tau": cfg.tau, "Detections": str(grid)}))

        decoded = sorted(decode_multiuser(grid, params, cfg))
        if not decoded:
            typer.echo("none")
        for m in decoded:
            if rcrm and params.candidates >= 2**PAYLOAD_BITS and m < 2**PAYLOAD_BITS:
                typer.echo(f"m={m} {rcrm_unpack(m)}")
            else:
                typer.echo(f"m={m}")
    except CodedStsError as e:
        exit_with_error(console, e)
