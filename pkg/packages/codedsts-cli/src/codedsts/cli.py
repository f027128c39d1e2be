"""CodedSTS CLI - coded single-tone signaling simulator."""

import typer

from codedsts.commands import (
    decode_cmd,
    encode_cmd,
    offset_cmd,
    params_cmd,
    sweep_cmd,
    validate_cmd,
    version_cmd,
)

app = typer.Typer(
    name="codedsts",
    help="CodedSTS - coded single-tone signaling simulator. Tone indices are 0-based.",
    add_completion=False,
)

# Register commands
app.command(name="encode")(encode_cmd.encode_message)
app.command(name="decode")(decode_cmd.decode_detections)
app.command(name="offset")(offset_cmd.recover_offset)
app.command()(validate_cmd.validate)
app.command()(sweep_cmd.sweep)
app.command(name="params")(params_cmd.show_params)
app.command()(version_cmd.version)

if __name__ == "__main__":
    app()
