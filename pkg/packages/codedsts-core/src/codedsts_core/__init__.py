"""CodedSTS Core - coded single-tone signaling codec, physical layer and decoder."""

from codedsts_core.codec import (
    CodeParams,
    GftContext,
    Message,
    StsCodeword,
    codebook,
    correct_offset,
    encode,
    estimate_offset,
    gft_context,
    inverse_gft,
    is_valid_codeword,
    max_agreement,
    pack_message,
    separability_bound,
    shift,
    smallest_compatible_prime,
    unpack_message,
)
from codedsts_core.decoder import DecoderConfig, decode_multiuser
from codedsts_core.exceptions import (
    BlockLengthIncompatibleError,
    CandidateSpaceTooLargeError,
    CodedStsError,
    CodingError,
    ConfigurationError,
    DimensionMismatchError,
    EmptyGridError,
    FieldArithmeticError,
    FieldMismatchError,
    FieldOverflowError,
    IndexOutOfGridError,
    InvalidParameterError,
    MessageOutOfRangeError,
    NonPrimeModulusError,
    PhyError,
    ResultExportError,
    SimulationError,
    ZeroInverseError,
)
from codedsts_core.galois_field import Field, FieldElement, field_new
from codedsts_core.rcrm import BaseStationId, Rcrm, collides, hash_bsid, rcrm_pack, rcrm_unpack

__version__ = "1.0.0"

__all__ = [
    # Exceptions
    "CodedStsError",
    "ConfigurationError",
    "FieldArithmeticError",
    "CodingError",
    "PhyError",
    "SimulationError",
    "InvalidParameterError",
    "NonPrimeModulusError",
    "ZeroInverseError",
    "FieldMismatchError",
    "MessageOutOfRangeError",
    "BlockLengthIncompatibleError",
    "CandidateSpaceTooLargeError",
    "IndexOutOfGridError",
    "DimensionMismatchError",
    "EmptyGridError",
    "FieldOverflowError",
    "ResultExportError",
    # Field
    "Field",
    "FieldElement",
    "field_new",
    # Codec
    "CodeParams",
    "GftContext",
    "Message",
    "StsCodeword",
    "codebook",
    "correct_offset",
    "encode",
    "estimate_offset",
    "gft_context",
    "inverse_gft",
    "is_valid_codeword",
    "max_agreement",
    "pack_message",
    "separability_bound",
    "shift",
    "smallest_compatible_prime",
    "unpack_message",
    # Decoder
    "DecoderConfig",
    "decode_multiuser",
    # RCRM
    "BaseStationId",
    "Rcrm",
    "collides",
    "hash_bsid",
    "rcrm_pack",
    "rcrm_unpack",
]
