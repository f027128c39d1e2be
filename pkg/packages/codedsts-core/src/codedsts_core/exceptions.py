"""Custom exceptions for CodedSTS."""

from typing import Any


class CodedStsError(Exception):
    """Base exception for all CodedSTS errors."""


class ConfigurationError(CodedStsError):
    """Raised when there is a configuration error."""


class FieldArithmeticError(CodedStsError):
    """Raised when finite-field arithmetic is misused."""


class CodingError(CodedStsError):
    """Raised when encoding or decoding fails."""


class PhyError(CodedStsError):
    """Raised when tone-grid or channel operations fail."""


class SimulationError(CodedStsError):
    """Raised when an experiment cannot be run or exported."""


class InvalidParameterError(CodedStsError):
    """Raised when invalid parameters are provided."""

    def __init__(self, param_name: str, value: Any, constraint: str) -> None:
        super().__init__(f"Invalid parameter '{param_name}' = {value}: {constraint}")
        self.param_name = param_name
        self.value = value
        self.constraint = constraint


class NonPrimeModulusError(FieldArithmeticError):
    """Raised when a field order is not prime."""

    def __init__(self, modulus: int) -> None:
        super().__init__(
            f"Field order {modulus} is not prime. Only prime fields GF(p) are supported; "
            f"use 'codedsts params' to find a compatible prime."
        )
        self.modulus = modulus


class ZeroInverseError(FieldArithmeticError):
    """Raised when the multiplicative inverse of zero is requested."""

    def __init__(self) -> None:
        super().__init__("Zero has no multiplicative inverse")


class FieldMismatchError(FieldArithmeticError):
    """Raised when operands belong to different fields."""

    def __init__(self, left: int, right: int) -> None:
        super().__init__(f"Cannot combine elements of GF({left}) and GF({right})")
        self.left = left
        self.right = right


class MessageOutOfRangeError(CodingError):
    """Raised when a message does not fit the code's message space."""

    def __init__(self, message: int, limit: int) -> None:
        super().__init__(f"Message {message} is outside [0, {limit})")
        self.message = message
        self.limit = limit


class BlockLengthIncompatibleError(CodingError):
    """Raised when the block length does not divide the multiplicative group order."""

    def __init__(self, block_length: int, field_order: int) -> None:
        super().__init__(
            f"Block length N={block_length} does not divide D-1={field_order - 1} "
            f"for GF({field_order})"
        )
        self.block_length = block_length
        self.field_order = field_order


class CandidateSpaceTooLargeError(CodingError):
    """Raised when exhaustive candidate enumeration exceeds the configured cap."""

    def __init__(self, candidates: int, cap: int) -> None:
        super().__init__(
            f"Candidate space of {candidates} messages exceeds enumeration cap {cap}"
        )
        self.candidates = candidates
        self.cap = cap


class IndexOutOfGridError(PhyError):
    """Raised when a tone index does not fit the subcarrier grid."""

    def __init__(self, index: int, subcarriers: int) -> None:
        super().__init__(f"Tone index {index} is outside a grid of {subcarriers} subcarriers")
        self.index = index
        self.subcarriers = subcarriers


class DimensionMismatchError(PhyError):
    """Raised when grid or vector shapes do not agree."""

    def __init__(self, expected: Any, actual: Any) -> None:
        super().__init__(f"Dimension mismatch: expected {expected}, got {actual}")
        self.expected = expected
        self.actual = actual


class EmptyGridError(PhyError):
    """Raised when an operation needs at least one energized column."""

    def __init__(self) -> None:
        super().__init__("Tone grid has no energized OFDM symbol")


class FieldOverflowError(CodingError):
    """Raised when an RCRM field does not fit its bit width."""

    def __init__(self, field_name: str, value: int, bits: int) -> None:
        super().__init__(f"RCRM field '{field_name}' = {value} does not fit in {bits} bits")
        self.field_name = field_name
        self.value = value
        self.bits = bits


class ResultExportError(SimulationError):
    """Raised when sweep results cannot be written."""

    def __init__(self, path: str, reason: str) -> None:
        super().__init__(f"Failed to write results to {path}: {reason}")
        self.path = path
        self.reason = reason
