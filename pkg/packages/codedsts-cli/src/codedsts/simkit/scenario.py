"""Message selection for the users of one trial."""

from dataclasses import dataclass

import numpy as np
from codedsts_core.rcrm import (
    BSID_BITS,
    PRIORITY_BITS,
    RESOURCE_ID_BITS,
    TARGET_SINR_BITS,
    BaseStationId,
    Rcrm,
    hash_bsid,
    rcrm_pack,
)

from codedsts.config.schema import Scenario, SimConfig

# One cell serves at most one user per radio resource
USERS_PER_CELL = 2**RESOURCE_ID_BITS


@dataclass(frozen=True)
class ScenarioDraw:
    """Messages in user order; ``collisions`` counts users whose message another user also sent."""

    messages: tuple[int, ...]
    collisions: int = 0


def draw_distinct(cfg: SimConfig, rng: np.random.Generator) -> ScenarioDraw:
    """d distinct messages drawn uniformly from the D^K message space."""
    messages = rng.choice(cfg.code_params.candidates, size=cfg.users, replace=False)
    return ScenarioDraw(messages=tuple(int(m) for m in messages))


def draw_rcrm(cfg: SimConfig, rng: np.random.Generator, timeslot: int) -> ScenarioDraw:
    """RCRM payloads from users grouped into cells of distinct base stations.

    Inside a cell each user holds a different resource ID, so only users of different
    cells can send identical payloads.
    """
    n_cells = -(-cfg.users // USERS_PER_CELL)
    bsids = rng.choice(2**BSID_BITS, size=n_cells, replace=False)

    messages: list[int] = []
    for cell, bsid in enumerate(bsids):
        size = min(USERS_PER_CELL, cfg.users - cell * USERS_PER_CELL)
        resources = rng.permutation(USERS_PER_CELL)[:size]
        bs_hash = hash_bsid(BaseStationId(int(bsid)), timeslot)
        for resource_id in resources:
            messages.append(
                rcrm_pack(
                    Rcrm(
                        resource_id=int(resource_id),
                        priority=int(rng.integers(2**PRIORITY_BITS)),
                        target_sinr=int(rng.integers(2**TARGET_SINR_BITS)),
                        bs_hash=bs_hash,
                    )
                )
            )

    _, counts = np.unique(messages, return_counts=True)
    return ScenarioDraw(messages=tuple(messages), collisions=int(counts[counts > 1].sum()))


def draw_messages(cfg: SimConfig, rng: np.random.Generator, trial_index: int) -> ScenarioDraw:
    if cfg.scenario is Scenario.RCRM:
        return draw_rcrm(cfg, rng, timeslot=trial_index)
    return draw_distinct(cfg, rng)
