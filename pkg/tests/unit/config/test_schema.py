"""Tests for the experiment configuration schema."""

import pytest
from codedsts.config.schema import Config, LoggingConfig, Scenario, SimConfig
from codedsts_core.phy.channel import Fading
from pydantic import ValidationError


class TestSimConfigDefaults:
    """The defaults describe the 30-user (14, 1) over GF(631) experiment."""

    def test_code(self):
        cfg = SimConfig()
        assert str(cfg.code_params) == "(14, 1) over GF(631)"
        assert cfg.resolved_subcarriers == 631
        assert cfg.users == 30

    def test_receiver(self):
        channel = SimConfig().channel_config()
        assert (channel.n_rx, channel.n_tx, channel.fading) == (1, 1, Fading.RAYLEIGH)

    def test_channel_override(self):
        assert SimConfig(n_rx=2).channel_config(n_rx=4).n_rx == 4

    def test_sweep(self):
        cfg = SimConfig()
        assert len(cfg.sir_points) >= 8
        assert cfg.sir_points == sorted(cfg.sir_points)
        assert cfg.scenario is Scenario.DISTINCT

    def test_enums_render_as_values(self):
        cfg = SimConfig(scenario="rcrm", fading="awgn")
        assert (str(cfg.scenario), str(cfg.fading)) == ("rcrm", "awgn")
        assert f"{cfg.scenario}" == "rcrm"

    def test_default_decoder_threshold(self):
        assert SimConfig().decoder_config().tau == 7
        assert SimConfig(tau=14).decoder_config().tau == 14


class TestSimConfigValidation:
    """Cross-field checks reject impossible experiments."""

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"field_order": 512},
            {"field_order": 5, "block_length": 3},
            {"field_order": 17, "block_length": 16, "users": 18},
            {"subcarriers": 600},
            {"tau": 15},
            {"trials": 0},
            {"target_far": 1.0},
            {"fading_correlation": 1.0},
            {"workers": -1},
            {"validation_n_rx": []},
            {"validation_n_users": [0]},
            {"field_order": 17, "block_length": 16, "scenario": "rcrm"},
            {"scenario": "rcrm", "users": 2049},
            {"unknown_key": 1},
        ],
    )
    def test_rejected(self, kwargs):
        with pytest.raises(ValidationError):
            SimConfig(**kwargs)

    def test_separability_bound(self):
        with pytest.raises(ValidationError, match="separability bound"):
            SimConfig(field_order=17, block_length=16, message_length=2, users=16)

    def test_overbound_allowed_explicitly(self):
        cfg = SimConfig(
            field_order=17, block_length=16, message_length=2, users=16, allow_overbound=True
        )
        assert cfg.users == 16

    def test_frozen(self):
        with pytest.raises(ValidationError):
            SimConfig().trials = 5  # type: ignore[misc]

    def test_wider_grid(self):
        assert SimConfig(subcarriers=1024).resolved_subcarriers == 1024


class TestLoggingConfig:
    def test_level_normalized(self):
        assert LoggingConfig(level="debug").level == "DEBUG"

    def test_invalid_level(self):
        with pytest.raises(ValidationError):
            LoggingConfig(level="verbose")

    def test_invalid_format(self):
        with pytest.raises(ValidationError):
            LoggingConfig(format="xml")


def test_root_config_defaults():
    config = Config()
    assert config.simulation == SimConfig()
    assert config.logging.format == "text"
