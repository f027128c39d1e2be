"""Threshold energy detection and its closed-form statistics.

With equal per-antenna noise variance sigma^2 the combined energy z of an empty cell
is Erlang(n_rx, sigma^2); a cell carrying n_user faded tones of power p each is
Erlang(n_rx, sigma^2 + n_user * p).
"""

import math
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np
from scipy import optimize, stats

from codedsts_core.exceptions import DimensionMismatchError, InvalidParameterError


@dataclass(frozen=True)
class DetectionGrid:
    """Per-OFDM-symbol sets of subcarrier indices whose energy crossed the threshold."""

    subcarriers: int
    symbols: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        for detected in self.symbols:
            for index in detected:
                if not 0 <= index < self.subcarriers:
                    raise InvalidParameterError(
                        "detection", index, f"must lie in [0, {self.subcarriers})"
                    )

    @classmethod
    def from_mask(cls, mask: np.ndarray) -> "DetectionGrid":
        """Build from a boolean (S, N) mask."""
        if mask.ndim != 2:
            raise DimensionMismatchError("2-D (S, N) mask", mask.shape)
        return cls(
            subcarriers=int(mask.shape[0]),
            symbols=tuple(frozenset(np.flatnonzero(column).tolist()) for column in mask.T),
        )

    @classmethod
    def from_sets(cls, subcarriers: int, sets: Iterable[Iterable[int]]) -> "DetectionGrid":
        return cls(
            subcarriers=subcarriers,
            symbols=tuple(frozenset(int(i) for i in detected) for detected in sets),
        )

    @property
    def n(self) -> int:
        return len(self.symbols)

    @property
    def mask(self) -> np.ndarray:
        """Boolean (S, N) view of the detections."""
        out = np.zeros((self.subcarriers, self.n), dtype=bool)
        for column, detected in enumerate(self.symbols):
            out[list(detected), column] = True
        return out

    def __str__(self) -> str:
        return ";".join(" ".join(str(i) for i in sorted(s)) for s in self.symbols)


def detect(z: np.ndarray, x: float) -> DetectionGrid:
    """Cells with combined energy z >= x."""
    if x < 0:
        raise InvalidParameterError("x", x, "threshold must be non-negative")
    return DetectionGrid.from_mask(np.asarray(z) >= x)


def _check_noise(sigma2: float, n_rx: int) -> None:
    if sigma2 <= 0:
        raise InvalidParameterError("sigma2", sigma2, "must be positive")
    if n_rx < 1:
        raise InvalidParameterError("n_rx", n_rx, "must be at least 1")


def p_false_alarm(x: float, sigma2: float, n_rx: int) -> float:
    """P(z >= x) for a noise-only cell: the Erlang(n_rx, sigma^2) survival function."""
    _check_noise(sigma2, n_rx)
    if x <= 0:
        return 1.0
    return float(stats.gamma.sf(x, a=n_rx, scale=sigma2))


def p_erasure(x: float, sigma2: float, p_total: float, n_rx: int, n_user: int = 1) -> float:
    """P(z < x) for a cell carrying n_user independently faded tones of power p_total each."""
    _check_noise(sigma2, n_rx)
    if n_user < 1:
        raise InvalidParameterError("n_user", n_user, "must be at least 1")
    if p_total < 0:
        raise InvalidParameterError("p_total", p_total, "must be non-negative")
    if x <= 0:
        return 0.0
    return float(stats.gamma.cdf(x, a=n_rx, scale=sigma2 + n_user * p_total))


def threshold_for_far(target_far: float, sigma2: float, n_rx: int) -> float:
    """Invert p_false_alarm numerically.

    The survival function is continuous and strictly decreasing, so a bracketing
    root finder on [0, hi] converges; hi doubles until it brackets the target.
    """
    if not 0.0 < target_far < 1.0:
        raise InvalidParameterError("target_far", target_far, "must lie in (0, 1)")
    _check_noise(sigma2, n_rx)

    def excess(x: float) -> float:
        return p_false_alarm(x, sigma2, n_rx) - target_far

    hi = sigma2 * max(1.0, float(n_rx))
    while excess(hi) > 0:
        hi *= 2.0
    return float(optimize.brentq(excess, 0.0, hi, xtol=1e-14))


def tone_power_for_sir(sir_db: float, subcarriers: int, noise_var: float) -> float:
    """Per-tone received power p = SIR * S * sigma^2 (the DFT gain of S concentrates
    a symbol's energy on one bin). SIR of -inf maps to zero power."""
    if math.isinf(sir_db) and sir_db < 0:
        return 0.0
    return 10.0 ** (sir_db / 10.0) * subcarriers * noise_var

