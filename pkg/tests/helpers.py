"""Test helper functions and utilities."""

from collections.abc import Sequence
from typing import Any

import numpy as np
from codedsts.config.schema import SimConfig
from codedsts_core.codec import CodeParams, codeword_tones
from codedsts_core.phy.detection import DetectionGrid


def perfect_detections(
    params: CodeParams, messages: Sequence[int], subcarriers: int | None = None
) -> DetectionGrid:
    """Detection grid holding exactly the tones of the given messages."""
    tones = codeword_tones(params, messages)
    return DetectionGrid.from_sets(
        subcarriers or params.order, [tones[:, n] for n in range(params.n)]
    )


def create_test_config(**overrides: Any) -> SimConfig:
    """Small GF(17), N=16, K=1 experiment that runs in milliseconds."""
    values: dict[str, Any] = {
        "field_order": 17,
        "block_length": 16,
        "message_length": 1,
        "users": 3,
        "sir_points": [0.0, 10.0],
        "trials": 8,
        "validation_samples": 2000,
        "validation_n_rx": [1],
        "validation_n_users": [1],
    }
    values.update(overrides)
    return SimConfig(**values)


def random_subset(rng: np.random.Generator, population: int, size: int) -> list[int]:
    return [int(m) for m in rng.choice(population, size=size, replace=False)]
