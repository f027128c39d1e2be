"""SIR sweeps over many trials, optionally fanned out to worker processes.

Trials are grouped into contiguous index blocks. Each block returns integer tallies,
and tallies add associatively, so the result does not depend on worker count or
completion order.
"""

import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field

import psutil
from codedsts_core.phy.detection import threshold_for_far

from codedsts.config.schema import SimConfig
from codedsts.simkit.stats import wilson_interval
from codedsts.simkit.trial import UserStatus, run_trial
from codedsts.utils.streaming_progress import TrialProgress

logger = logging.getLogger(__name__)

BLOCK_TRIALS = 64


@dataclass(frozen=True)
class SweepTally:
    """Integer counts accumulated over trials at one SIR point."""

    trials: int = 0
    user_trials: int = 0
    decoded: int = 0
    erasures: int = 0
    errors: int = 0
    false_accepts: int = 0
    spurious: int = 0
    collisions: int = 0
    max_footprint: int = 0

    def __add__(self, other: "SweepTally") -> "SweepTally":
        return SweepTally(
            trials=self.trials + other.trials,
            user_trials=self.user_trials + other.user_trials,
            decoded=self.decoded + other.decoded,
            erasures=self.erasures + other.erasures,
            errors=self.errors + other.errors,
            false_accepts=self.false_accepts + other.false_accepts,
            spurious=self.spurious + other.spurious,
            collisions=self.collisions + other.collisions,
            max_footprint=max(self.max_footprint, other.max_footprint),
        )


@dataclass(frozen=True)
class SweepPoint:
    """Rates at one SIR point. Erasure and error rates are per transmitted user."""

    sir_db: float
    tally: SweepTally

    @property
    def trials(self) -> int:
        return self.tally.trials

    @property
    def erasure_rate(self) -> float:
        return self.tally.erasures / self.tally.user_trials

    @property
    def error_rate(self) -> float:
        return self.tally.errors / self.tally.user_trials

    @property
    def false_accept_rate(self) -> float:
        """Fraction of trials decoding at least one message nobody sent."""
        return self.tally.false_accepts / self.tally.trials

    @property
    def erasure_ci(self) -> tuple[float, float]:
        return wilson_interval(self.tally.erasures, self.tally.user_trials)

    @property
    def error_ci(self) -> tuple[float, float]:
        return wilson_interval(self.tally.errors, self.tally.user_trials)

    @property
    def false_accept_ci(self) -> tuple[float, float]:
        return wilson_interval(self.tally.false_accepts, self.tally.trials)


@dataclass(frozen=True)
class SweepResult:
    config: SimConfig
    points: tuple[SweepPoint, ...] = field(default_factory=tuple)


def run_block(
    cfg: SimConfig, sir_db: float, start: int, stop: int, threshold: float
) -> SweepTally:
    """Run trials start..stop-1 at one SIR point."""
    tally = SweepTally()
    for trial_index in range(start, stop):
        outcome = run_trial(cfg, sir_db, trial_index, threshold=threshold)
        tally = tally + SweepTally(
            trials=1,
            user_trials=len(outcome.statuses),
            decoded=outcome.count(UserStatus.DECODED),
            erasures=outcome.count(UserStatus.ERASURE),
            errors=outcome.count(UserStatus.ERROR),
            false_accepts=int(bool(outcome.spurious)),
            spurious=len(outcome.spurious),
            collisions=outcome.collisions,
            max_footprint=max(outcome.footprint, default=0),
        )
    return tally


def resolve_workers(workers: int) -> int:
    """0 means one worker per physical core."""
    if workers > 0:
        return workers
    return psutil.cpu_count(logical=False) or psutil.cpu_count() or 1


def _blocks(trials: int) -> list[tuple[int, int]]:
    return [(start, min(start + BLOCK_TRIALS, trials)) for start in range(0, trials, BLOCK_TRIALS)]


def run_sweep(cfg: SimConfig, progress: TrialProgress | None = None) -> SweepResult:
    """Run ``cfg.trials`` trials at every SIR point.

    Trial i uses the same random stream at every SIR point, so curves are compared on
    common random numbers.
    """
    threshold = threshold_for_far(cfg.target_far, cfg.noise_var, cfg.n_rx)
    workers = resolve_workers(cfg.workers)
    blocks = _blocks(cfg.trials)
    tallies = [SweepTally() for _ in cfg.sir_points]
    logger.info(
        f"Sweeping {len(cfg.sir_points)} SIR point(s) x {cfg.trials} trials "
        f"with {workers} worker(s), threshold x={threshold:.6g}"
    )

    if workers == 1:
        for index, sir_db in enumerate(cfg.sir_points):
            for start, stop in blocks:
                tallies[index] = tallies[index] + run_block(cfg, sir_db, start, stop, threshold)
                if progress:
                    progress.update(stop - start)
            logger.debug(f"SIR {sir_db:g} dB done")
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = {
                executor.submit(run_block, cfg, sir_db, start, stop, threshold): (
                    index,
                    stop - start,
                )
                for index, sir_db in enumerate(cfg.sir_points)
                for start, stop in blocks
            }
            for future in as_completed(futures):
                index, size = futures[future]
                tallies[index] = tallies[index] + future.result()
                if progress:
                    progress.update(size)

    if progress:
        progress.close()

    points = tuple(
        SweepPoint(sir_db=sir_db, tally=tally)
        for sir_db, tally in zip(cfg.sir_points, tallies, strict=True)
    )
    return SweepResult(config=cfg, points=points)
