"""Tests for per-trial message selection."""

from collections import Counter

import numpy as np
from codedsts.simkit.scenario import (
    USERS_PER_CELL,
    draw_distinct,
    draw_messages,
    draw_rcrm,
)
from codedsts_core.rcrm import rcrm_unpack

from tests.helpers import create_test_config


class TestDrawDistinct:
    def test_distinct_messages_in_range(self):
        cfg = create_test_config(users=17)
        draw = draw_distinct(cfg, np.random.default_rng(0))
        assert sorted(draw.messages) == list(range(17))
        assert draw.collisions == 0

    def test_seeded(self):
        cfg = create_test_config(users=5)
        first = draw_distinct(cfg, np.random.default_rng(1))
        second = draw_distinct(cfg, np.random.default_rng(1))
        assert first == second


class TestDrawRcrm:
    """Users of one cell never share a resource ID, users of different cells may collide."""

    def config(self, users: int = 30):
        return create_test_config(
            field_order=631, block_length=14, users=users, scenario="rcrm"
        )

    def test_message_count_and_range(self):
        draw = draw_rcrm(self.config(), np.random.default_rng(0), timeslot=3)
        assert len(draw.messages) == 30
        assert all(0 <= m < 512 for m in draw.messages)

    def test_cells_use_distinct_resources_and_one_hash(self):
        draw = draw_rcrm(self.config(), np.random.default_rng(2), timeslot=5)
        for start in range(0, 30, USERS_PER_CELL):
            cell = [rcrm_unpack(m) for m in draw.messages[start : start + USERS_PER_CELL]]
            assert len({r.resource_id for r in cell}) == len(cell)
            assert len({r.bs_hash for r in cell}) == 1

    def test_collisions_count_repeated_messages(self):
        for seed in range(50):
            draw = draw_rcrm(self.config(120), np.random.default_rng(seed), timeslot=seed)
            counts = Counter(draw.messages)
            assert draw.collisions == sum(c for c in counts.values() if c > 1)

    def test_collisions_occur_with_many_cells(self):
        draws = [
            draw_rcrm(self.config(400), np.random.default_rng(seed), timeslot=seed)
            for seed in range(5)
        ]
        assert any(draw.collisions > 0 for draw in draws)


class TestDrawMessages:
    def test_dispatches_on_scenario(self):
        distinct = create_test_config(users=4)
        rcrm = create_test_config(field_order=631, block_length=14, users=4, scenario="rcrm")

        assert draw_messages(distinct, np.random.default_rng(0), 0).collisions == 0
        messages = draw_messages(rcrm, np.random.default_rng(0), 0).messages
        assert len({rcrm_unpack(m).bs_hash for m in messages}) == 1
