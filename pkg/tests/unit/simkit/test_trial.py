"""Tests for single end-to-end trials."""

import numpy as np
import pytest
from codedsts.simkit.trial import TrialOutcome, UserStatus, classify, run_trial, trial_rng

from tests.helpers import create_test_config


class TestClassify:
    """Attribution of decoded messages to users."""

    def test_all_decoded(self):
        statuses, spurious = classify([3, 8, 1], frozenset({1, 3, 8}))
        assert statuses == (UserStatus.DECODED,) * 3
        assert spurious == frozenset()

    def test_spurious_replaces_first_missing_user(self):
        statuses, spurious = classify([1, 2, 3], frozenset({1, 9}))
        assert statuses == (UserStatus.DECODED, UserStatus.ERROR, UserStatus.ERASURE)
        assert spurious == {9}

    def test_extra_spurious_without_missing_user(self):
        statuses, spurious = classify([1, 2], frozenset({1, 2, 7, 11}))
        assert statuses == (UserStatus.DECODED, UserStatus.DECODED)
        assert spurious == {7, 11}

    def test_nothing_decoded(self):
        statuses, _ = classify([4, 5], frozenset())
        assert statuses == (UserStatus.ERASURE, UserStatus.ERASURE)

    def test_identical_messages_merge(self):
        """Two senders of one message are both served by its single decode."""
        statuses, spurious = classify([4, 4], frozenset({4}))
        assert statuses == (UserStatus.DECODED, UserStatus.DECODED)
        assert not spurious


class TestTrialRng:
    def test_same_index_same_stream(self):
        assert trial_rng(5, 3).integers(1 << 30) == trial_rng(5, 3).integers(1 << 30)

    def test_indices_differ(self):
        draws = {int(trial_rng(5, i).integers(1 << 62)) for i in range(20)}
        assert len(draws) == 20

    def test_seeds_differ(self):
        assert trial_rng(1, 0).integers(1 << 62) != trial_rng(2, 0).integers(1 << 62)


class TestRunTrial:
    """End-to-end trials at the extremes of SIR."""

    def test_noiseless_decodes_everyone(self):
        cfg = create_test_config(users=12, fading="awgn", noise_var=1e-9, target_far=1e-6)
        for trial_index in range(5):
            outcome = run_trial(cfg, 30.0, trial_index)
            assert outcome.statuses == (UserStatus.DECODED,) * 12
            assert outcome.spurious == frozenset()

    def test_silent_users_are_erased(self):
        cfg = create_test_config(users=5, target_far=1e-3)
        outcome = run_trial(cfg, float("-inf"), 0)
        assert outcome.count(UserStatus.ERASURE) == 5
        assert not outcome.spurious

    def test_deterministic(self):
        cfg = create_test_config(users=6, master_seed=99)
        assert run_trial(cfg, -5.0, 17) == run_trial(cfg, -5.0, 17)

    def test_explicit_threshold(self):
        cfg = create_test_config(users=4)
        outcome = run_trial(cfg, 10.0, 0, threshold=float("inf"))
        assert outcome.count(UserStatus.ERASURE) == 4

    def test_statuses_partition_users(self):
        cfg = create_test_config(users=10, n_rx=2)
        outcome = run_trial(cfg, -8.0, 3)
        assert len(outcome.statuses) == 10
        assert sum(outcome.count(status) for status in UserStatus) == 10

    def test_footprint_bounded_by_user_count(self):
        cfg = create_test_config(field_order=631, block_length=14, users=30)
        outcome = run_trial(cfg, -20.0, 0)
        assert outcome.footprint == (30,) * 14

    def test_rcrm_collisions_recorded(self):
        cfg = create_test_config(
            field_order=631,
            block_length=14,
            users=400,
            scenario="rcrm",
            noise_var=1e-9,
            fading="awgn",
            target_far=1e-6,
        )
        outcome = run_trial(cfg, 30.0, 2)
        assert outcome.collisions > 0
        assert max(outcome.footprint) < 400
        assert outcome.count(UserStatus.DECODED) == 400


class TestTrialOutcome:
    def test_count(self):
        outcome = TrialOutcome(
            statuses=(UserStatus.DECODED, UserStatus.ERROR, UserStatus.DECODED),
            spurious=frozenset({3}),
            collisions=0,
            footprint=(3,),
        )
        assert outcome.count(UserStatus.DECODED) == 2
        assert outcome.count(UserStatus.ERASURE) == 0


@pytest.mark.parametrize("n_rx", [1, 4])
def test_trial_index_reuses_messages_across_sir(n_rx):
    """Common random numbers: the same trial draws the same users at every SIR point."""
    cfg = create_test_config(field_order=631, block_length=14, users=30, n_rx=n_rx)
    low = run_trial(cfg, -40.0, 1)
    high = run_trial(cfg, 20.0, 1)
    assert low.footprint == high.footprint
    assert np.mean([s is UserStatus.DECODED for s in high.statuses]) >= np.mean(
        [s is UserStatus.DECODED for s in low.statuses]
    )
