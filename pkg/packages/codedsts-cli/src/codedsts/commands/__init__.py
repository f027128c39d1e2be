"""Command implementations for CodedSTS CLI."""

from codedsts.commands import (
    decode_cmd,
    encode_cmd,
    offset_cmd,
    params_cmd,
    sweep_cmd,
    validate_cmd,
    version_cmd,
)

__all__ = [
    "decode_cmd",
    "encode_cmd",
    "offset_cmd",
    "params_cmd",
    "sweep_cmd",
    "validate_cmd",
    "version_cmd",
]
