"""Multi-user list decoder for detected tone sets.

The receiver cannot tell which user energized which tone, so every message of the
code is scored by the number of OFDM symbols in which its codeword tone was detected.
Messages scoring at least ``tau`` are accepted. Two distinct codewords share at most
K - 1 tones, so with ``tau = N`` and perfect detection up to ``separability_bound``
users decode without a spurious candidate.
"""

import logging
import math
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from codedsts_core.codec import CODEBOOK_CACHE_LIMIT, CodeParams, codebook, codebook_block
from codedsts_core.exceptions import (
    CandidateSpaceTooLargeError,
    DimensionMismatchError,
    InvalidParameterError,
)
from codedsts_core.phy.detection import DetectionGrid

logger = logging.getLogger(__name__)

DEFAULT_CANDIDATE_CAP = 2**24
BLOCK_SIZE = 65536


@dataclass(frozen=True)
class DecoderConfig:
    """Acceptance threshold and enumeration cap."""

    tau: int
    candidate_cap: int = DEFAULT_CANDIDATE_CAP

    def __post_init__(self) -> None:
        if self.tau < 1:
            raise InvalidParameterError("tau", self.tau, "must be at least 1")
        if self.candidate_cap < 1:
            raise InvalidParameterError("candidate_cap", self.candidate_cap, "must be positive")

    @classmethod
    def default_for(
        cls, params: CodeParams, candidate_cap: int = DEFAULT_CANDIDATE_CAP
    ) -> "DecoderConfig":
        """ceil(N/2) for K = 1, which splits the budget between errors and erasures;
        N for K > 1, where only full agreement rules out a mixture of other users' tones."""
        tau = math.ceil(params.n / 2) if params.k == 1 else params.n
        return cls(tau=tau, candidate_cap=candidate_cap)


def _candidate_blocks(params: CodeParams) -> Iterator[tuple[int, np.ndarray]]:
    if params.candidates <= CODEBOOK_CACHE_LIMIT:
        yield 0, codebook(params)
        return
    for start in range(0, params.candidates, BLOCK_SIZE):
        stop = min(start + BLOCK_SIZE, params.candidates)
        yield start, codebook_block(params, start, stop)


def score_candidates(
    detections: DetectionGrid, params: CodeParams
) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (first message, per-message match counts) for consecutive candidate blocks."""
    if detections.n != params.n:
        raise DimensionMismatchError(params.n, detections.n)

    mask = detections.mask
    if mask.shape[0] < params.order:
        # Tones beyond the grid can never be detected
        padded = np.zeros((params.order, params.n), dtype=bool)
        padded[: mask.shape[0]] = mask
        mask = padded

    columns = np.arange(params.n)
    for start, tones in _candidate_blocks(params):
        yield start, mask[tones, columns].sum(axis=1)


def decode_multiuser(
    detections: DetectionGrid, params: CodeParams, cfg: DecoderConfig
) -> frozenset[int]:
    """Every message whose codeword tone is detected in at least tau of the N symbols.

    Raises:
        CandidateSpaceTooLargeError: If D^K exceeds ``cfg.candidate_cap``
        DimensionMismatchError: If the detection grid does not span N symbols
    """
    if params.candidates > cfg.candidate_cap:
        raise CandidateSpaceTooLargeError(params.candidates, cfg.candidate_cap)
    if cfg.tau > params.n:
        raise InvalidParameterError("tau", cfg.tau, f"must not exceed N={params.n}")

    decoded: set[int] = set()
    for start, scores in score_candidates(detections, params):
        decoded.update((start + np.flatnonzero(scores >= cfg.tau)).tolist())

    logger.debug(f"Decoded {len(decoded)} message(s) at tau={cfg.tau}")
    return frozenset(decoded)
