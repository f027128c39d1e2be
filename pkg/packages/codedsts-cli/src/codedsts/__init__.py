"""CodedSTS - coded single-tone signaling simulator CLI."""

__version__ = "1.0.0"
__author__ = "CodedSTS Contributors"
__description__ = "Encode, decode and simulate coded single-tone signaling over OFDM"

__all__ = [
    "__author__",
    "__description__",
    "__version__",
]
