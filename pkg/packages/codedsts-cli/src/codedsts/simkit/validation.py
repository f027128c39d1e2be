"""Monte Carlo check of the closed-form detection statistics.

Noise-only cells are compared with the false-alarm probability, and cells carrying
n_user independently faded tones with the erasure probability. Each row passes when
the observed count lies within three binomial standard deviations of the analytic
expectation.
"""

import logging
from dataclasses import dataclass
from enum import StrEnum

import numpy as np
from codedsts_core.phy.channel import ChannelConfig, Fading, combine_energy, receive
from codedsts_core.phy.detection import (
    p_erasure,
    p_false_alarm,
    threshold_for_far,
    tone_power_for_sir,
)
from codedsts_core.phy.grid import ToneGrid

from codedsts.config.schema import SimConfig
from codedsts.simkit.stats import binomial_z

logger = logging.getLogger(__name__)

BATCH_CELLS = 65536
Z_LIMIT = 3.0
# Separates validation streams from trial streams derived from the same seed
VALIDATION_STREAM = 2**32


class CheckKind(StrEnum):
    FALSE_ALARM = "false_alarm"
    ERASURE = "erasure"


@dataclass(frozen=True)
class DetectionCheck:
    kind: CheckKind
    n_rx: int
    n_user: int
    threshold: float
    analytic: float
    hits: int
    samples: int

    @property
    def empirical(self) -> float:
        return self.hits / self.samples

    @property
    def z(self) -> float:
        return binomial_z(self.hits, self.samples, self.analytic)

    @property
    def passed(self) -> bool:
        return abs(self.z) <= Z_LIMIT


@dataclass(frozen=True)
class DetectionReport:
    sir_db: float
    tone_power: float
    checks: tuple[DetectionCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


def _rng(master_seed: int, kind: CheckKind, n_rx: int, n_user: int) -> np.random.Generator:
    kind_index = list(CheckKind).index(kind)
    key = (VALIDATION_STREAM, kind_index, n_rx, n_user)
    return np.random.default_rng(np.random.SeedSequence(master_seed, spawn_key=key))


def _perturbed(probability: float, perturb: float) -> float:
    return min(1.0, probability * (1.0 + perturb))


def _detections(
    channel: ChannelConfig,
    n_user: int,
    power: float,
    threshold: float,
    samples: int,
    rng: np.random.Generator,
) -> int:
    """Number of ``samples`` cells, each carrying n_user tones, whose energy reaches x."""
    hits = 0
    remaining = samples
    while remaining:
        size = min(BATCH_CELLS, remaining)
        shape = (size, 1)
        grids = [ToneGrid(np.full(shape, np.sqrt(power), dtype=np.complex128))] * n_user
        energy = combine_energy(receive(grids, channel, rng, shape=shape))
        hits += int(np.count_nonzero(energy >= threshold))
        remaining -= size
    return hits


def validate_detection(
    cfg: SimConfig,
    sir_db: float,
    samples: int | None = None,
    perturb: float = 0.0,
    threshold: float | None = None,
) -> DetectionReport:
    """Compare empirical detection rates with their closed forms.

    Args:
        cfg: Experiment settings; uses noise_var, target_far, n_tx, validation_* keys
        sir_db: SIR setting the occupied-cell tone power
        samples: Cells per row (defaults to cfg.validation_samples)
        perturb: Relative error injected into every analytic value, for negative controls
        threshold: Fixed energy threshold instead of the one matching target_far
    """
    samples = samples if samples is not None else cfg.validation_samples
    power = tone_power_for_sir(sir_db, cfg.resolved_subcarriers, cfg.noise_var)
    checks: list[DetectionCheck] = []

    for n_rx in cfg.validation_n_rx:
        # Closed forms assume independent Rayleigh cells
        channel = ChannelConfig(
            n_rx=n_rx, n_tx=cfg.n_tx, noise_var=cfg.noise_var, fading=Fading.RAYLEIGH
        )
        if threshold is None:
            x = threshold_for_far(cfg.target_far, cfg.noise_var, n_rx)
        else:
            x = threshold

        rng = _rng(cfg.master_seed, CheckKind.FALSE_ALARM, n_rx, 0)
        alarms = _detections(channel, 0, 0.0, x, samples, rng)
        analytic = _perturbed(p_false_alarm(x, cfg.noise_var, n_rx), perturb)
        checks.append(
            DetectionCheck(CheckKind.FALSE_ALARM, n_rx, 0, x, analytic, alarms, samples)
        )

        for n_user in cfg.validation_n_users:
            rng = _rng(cfg.master_seed, CheckKind.ERASURE, n_rx, n_user)
            misses = samples - _detections(channel, n_user, power, x, samples, rng)
            analytic = _perturbed(p_erasure(x, cfg.noise_var, power, n_rx, n_user), perturb)
            checks.append(
                DetectionCheck(CheckKind.ERASURE, n_rx, n_user, x, analytic, misses, samples)
            )
        logger.debug(f"Validated n_rx={n_rx} at x={x:.6g}")

    report = DetectionReport(sir_db=sir_db, tone_power=power, checks=tuple(checks))
    logger.info(f"Detection validation {'passed' if report.passed else 'FAILED'}")
    return report
