"""OFDM tone grids: S subcarriers x N OFDM symbols of complex amplitudes."""

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from codedsts_core.exceptions import (
    DimensionMismatchError,
    EmptyGridError,
    IndexOutOfGridError,
    InvalidParameterError,
)


@dataclass(frozen=True, eq=False)
class ToneGrid:
    """Complex amplitudes indexed [subcarrier, symbol]."""

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.amplitudes.ndim != 2:
            raise DimensionMismatchError("2-D (S, N) array", self.amplitudes.shape)

    @classmethod
    def zeros(cls, subcarriers: int, symbols: int) -> "ToneGrid":
        return cls(np.zeros((subcarriers, symbols), dtype=np.complex128))

    @property
    def subcarriers(self) -> int:
        return int(self.amplitudes.shape[0])

    @property
    def symbols(self) -> int:
        return int(self.amplitudes.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return self.subcarriers, self.symbols

    def occupied(self) -> tuple[np.ndarray, np.ndarray]:
        """(subcarrier, symbol) indices of nonzero cells, ordered by symbol."""
        cols, rows = np.nonzero(self.amplitudes.T)
        return rows, cols

    def scaled(self, power: float) -> "ToneGrid":
        """Same tones with every amplitude multiplied by sqrt(power)."""
        if power < 0:
            raise InvalidParameterError("power", power, "must be non-negative")
        return ToneGrid(self.amplitudes * math.sqrt(power))


def modulate(c: Iterable[int], subcarriers: int, power: float) -> ToneGrid:
    """Energize subcarrier c_n with amplitude sqrt(power) in OFDM symbol n."""
    if power <= 0:
        raise InvalidParameterError("power", power, "must be positive")

    tones = np.fromiter((int(x) for x in c), dtype=np.int64)
    out_of_grid = tones[(tones < 0) | (tones >= subcarriers)]
    if out_of_grid.size:
        raise IndexOutOfGridError(int(out_of_grid[0]), subcarriers)

    grid = np.zeros((subcarriers, tones.size), dtype=np.complex128)
    grid[tones, np.arange(tones.size)] = math.sqrt(power)
    return ToneGrid(grid)


def superpose(grids: Sequence[ToneGrid]) -> ToneGrid:
    """Element-wise sum; co-located identical tones add coherently."""
    if not grids:
        raise InvalidParameterError("grids", 0, "at least one grid is required")

    shape = grids[0].shape
    for grid in grids[1:]:
        if grid.shape != shape:
            raise DimensionMismatchError(shape, grid.shape)
    return ToneGrid(np.sum([grid.amplitudes for grid in grids], axis=0))


def footprint(grid: ToneGrid) -> np.ndarray:
    """Number of energized subcarriers in each OFDM symbol."""
    return np.count_nonzero(grid.amplitudes, axis=0)


def papr(grid: ToneGrid) -> float:
    """Peak-to-average power ratio in dB of the per-symbol time-domain waveform.

    Each energized column is taken through an inverse DFT; the worst column wins.
    """
    energized = np.any(grid.amplitudes != 0, axis=0)
    if not energized.any():
        raise EmptyGridError()

    waveform = np.fft.ifft(grid.amplitudes[:, energized], axis=0)
    power = np.abs(waveform) ** 2
    ratio = power.max(axis=0) / power.mean(axis=0)
    return float(10.0 * np.log10(ratio.max()))
