"""Per-tone MIMO channel: Rayleigh or AWGN-only, with energy combining.

Every occupied cell of a transmit grid sees y_i = sum_j h_ij sqrt(p_j) + n_i at
receive antenna i. Transmit power is split evenly across the N_t antennas, so the
marginal of an occupied cell is CN(0, p + sigma^2). Users are faded independently
and summed per cell before noise is added once.
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum

import numpy as np
from scipy.signal import lfilter

from codedsts_core.exceptions import DimensionMismatchError, InvalidParameterError
from codedsts_core.phy.grid import ToneGrid


class Fading(StrEnum):
    RAYLEIGH = "rayleigh"
    AWGN = "awgn"


@dataclass(frozen=True)
class ChannelConfig:
    """Receiver and propagation settings.

    ``correlation`` couples the fades of consecutive occupied cells of one transmitter
    as a first-order autoregression; 0 gives independent fades per tone.
    """

    n_rx: int = 1
    n_tx: int = 1
    noise_var: float = 1.0
    fading: Fading = Fading.RAYLEIGH
    correlation: float = 0.0

    def __post_init__(self) -> None:
        if self.n_rx < 1:
            raise InvalidParameterError("n_rx", self.n_rx, "must be at least 1")
        if self.n_tx < 1:
            raise InvalidParameterError("n_tx", self.n_tx, "must be at least 1")
        if self.noise_var <= 0:
            raise InvalidParameterError("noise_var", self.noise_var, "must be positive")
        if not 0.0 <= self.correlation < 1.0:
            raise InvalidParameterError("correlation", self.correlation, "must lie in [0, 1)")


@dataclass(frozen=True, eq=False)
class ReceivedGrid:
    """Per-antenna received samples indexed [antenna, subcarrier, symbol]."""

    samples: np.ndarray

    @property
    def n_rx(self) -> int:
        return int(self.samples.shape[0])

    @property
    def shape(self) -> tuple[int, int]:
        return int(self.samples.shape[1]), int(self.samples.shape[2])


def complex_gaussian(
    rng: np.random.Generator, shape: tuple[int, ...], variance: float = 1.0
) -> np.ndarray:
    """Circularly-symmetric CN(0, variance) samples."""
    scale = math.sqrt(variance / 2.0)
    return scale * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def _fades(cfg: ChannelConfig, cells: int, rng: np.random.Generator) -> np.ndarray:
    """CN(0, 1) gains of shape (n_rx, n_tx, cells)."""
    innovations = complex_gaussian(rng, (cfg.n_rx, cfg.n_tx, cells))
    if cfg.correlation == 0.0 or cells < 2:
        return innovations

    rho = cfg.correlation
    # Stationary start: the first output keeps unit variance
    initial = rho * complex_gaussian(rng, (cfg.n_rx, cfg.n_tx, 1))
    gains, _ = lfilter([math.sqrt(1.0 - rho**2)], [1.0, -rho], innovations, axis=-1, zi=initial)
    return gains


def _faded_contribution(
    grid: ToneGrid, cfg: ChannelConfig, rng: np.random.Generator
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    rows, cols = grid.occupied()
    amplitudes = grid.amplitudes[rows, cols]
    if cfg.fading is Fading.AWGN:
        return rows, cols, np.broadcast_to(amplitudes, (cfg.n_rx, amplitudes.size))

    gains = _fades(cfg, amplitudes.size, rng)
    per_antenna = amplitudes / math.sqrt(cfg.n_tx)
    return rows, cols, (gains * per_antenna).sum(axis=1)


def receive(
    grids: Sequence[ToneGrid],
    cfg: ChannelConfig,
    rng: np.random.Generator,
    shape: tuple[int, int] | None = None,
) -> ReceivedGrid:
    """Pass each transmitter through its own channel and add receiver noise once.

    ``shape`` is required when ``grids`` is empty (noise-only reception).
    """
    if shape is None:
        if not grids:
            raise InvalidParameterError("shape", None, "required when no grid is transmitted")
        shape = grids[0].shape

    samples = complex_gaussian(rng, (cfg.n_rx, *shape), cfg.noise_var)
    for grid in grids:
        if grid.shape != shape:
            raise DimensionMismatchError(shape, grid.shape)
        rows, cols, contribution = _faded_contribution(grid, cfg, rng)
        samples[:, rows, cols] += contribution
    return ReceivedGrid(samples)


def apply_channel(grid: ToneGrid, cfg: ChannelConfig, rng: np.random.Generator) -> ReceivedGrid:
    """Single-transmitter reception."""
    return receive([grid], cfg, rng)


def combine_energy(recv: ReceivedGrid) -> np.ndarray:
    """z = sum_i |y_i|^2 per (subcarrier, symbol)."""
    return np.sum(np.abs(recv.samples) ** 2, axis=0)
