"""One end-to-end trial: encode, modulate, superpose, fade, detect, decode, classify."""

from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum

import numpy as np
from codedsts_core.codec import codeword_tones
from codedsts_core.decoder import decode_multiuser
from codedsts_core.phy.channel import combine_energy, receive
from codedsts_core.phy.detection import detect, threshold_for_far, tone_power_for_sir
from codedsts_core.phy.grid import footprint, modulate, superpose

from codedsts.config.schema import SimConfig
from codedsts.simkit.scenario import draw_messages


class UserStatus(StrEnum):
    DECODED = "decoded"
    ERASURE = "erasure"
    ERROR = "error"


@dataclass(frozen=True)
class TrialOutcome:
    """Per-user statuses in user order plus what the receiver got wrong."""

    statuses: tuple[UserStatus, ...]
    spurious: frozenset[int]
    collisions: int
    footprint: tuple[int, ...]

    def count(self, status: UserStatus) -> int:
        return sum(1 for s in self.statuses if s is status)


def trial_rng(master_seed: int, trial_index: int) -> np.random.Generator:
    """Independent stream per trial index, reused at every SIR point."""
    return np.random.default_rng(np.random.SeedSequence(master_seed, spawn_key=(trial_index,)))


def classify(
    sent: Sequence[int], decoded: frozenset[int]
) -> tuple[tuple[UserStatus, ...], frozenset[int]]:
    """Attribute decoded messages to users.

    A user is decoded when its message is in the decoded set. Senders cannot be told
    apart, so each message nobody sent stands in for one missing user: the first
    min(missing, spurious) missing users in user order are errors, the rest erasures.
    """
    spurious = decoded - set(sent)
    budget = len(spurious)
    statuses: list[UserStatus] = []
    for message in sent:
        if message in decoded:
            statuses.append(UserStatus.DECODED)
        elif budget > 0:
            statuses.append(UserStatus.ERROR)
            budget -= 1
        else:
            statuses.append(UserStatus.ERASURE)
    return tuple(statuses), frozenset(spurious)


def run_trial(
    cfg: SimConfig,
    sir_db: float,
    trial_index: int,
    threshold: float | None = None,
) -> TrialOutcome:
    """Deterministic given (cfg.master_seed, trial_index).

    ``threshold`` defaults to the energy level giving ``cfg.target_far``; sweeps pass it
    in so it is computed once per receiver configuration.
    """
    rng = trial_rng(cfg.master_seed, trial_index)
    params = cfg.code_params
    subcarriers = cfg.resolved_subcarriers
    channel = cfg.channel_config()
    if threshold is None:
        threshold = threshold_for_far(cfg.target_far, cfg.noise_var, channel.n_rx)

    draw = draw_messages(cfg, rng, trial_index)
    codewords = codeword_tones(params, draw.messages)
    unit_grids = [modulate(tones, subcarriers, 1.0) for tones in codewords]
    power = tone_power_for_sir(sir_db, subcarriers, cfg.noise_var)
    grids = [grid.scaled(power) for grid in unit_grids]

    received = receive(grids, channel, rng, shape=(subcarriers, params.n))
    detections = detect(combine_energy(received), threshold)
    decoded = decode_multiuser(detections, params, cfg.decoder_config())

    statuses, spurious = classify(draw.messages, decoded)
    return TrialOutcome(
        statuses=statuses,
        spurious=spurious,
        collisions=draw.collisions,
        footprint=tuple(int(c) for c in footprint(superpose(unit_grids))),
    )
