"""Configuration schema for CodedSTS."""

from enum import StrEnum

from codedsts_core.codec import CodeParams, separability_bound
from codedsts_core.decoder import DEFAULT_CANDIDATE_CAP, DecoderConfig
from codedsts_core.exceptions import CodedStsError
from codedsts_core.phy.channel import ChannelConfig, Fading
from codedsts_core.rcrm import BSID_BITS, PAYLOAD_BITS
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Scenario(StrEnum):
    """How each trial picks the users' messages."""

    DISTINCT = "distinct"
    RCRM = "rcrm"


class LoggingConfig(BaseModel):
    level: str = "INFO"
    format: str = "text"
    file: str | None = None

    @field_validator("level")
    @classmethod
    def validate_level(cls, v: str) -> str:
        valid = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
        if v.upper() not in valid:
            raise ValueError(f"Invalid log level: {v}")
        return v.upper()

    @field_validator("format")
    @classmethod
    def validate_format(cls, v: str) -> str:
        if v not in {"text", "json"}:
            raise ValueError(f"Invalid log format: {v}")
        return v


class SimConfig(BaseModel):
    """One experiment: code, grid, users, receiver, and the SIR sweep.

    Defaults reproduce the 30-user, (14, 1) over GF(631) multi-user experiment.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    field_order: int = Field(default=631, ge=2)
    block_length: int = Field(default=14, ge=1)
    message_length: int = Field(default=1, ge=1)
    subcarriers: int | None = Field(default=None, ge=1)
    users: int = Field(default=30, ge=1)

    n_rx: int = Field(default=1, ge=1, le=64)
    n_tx: int = Field(default=1, ge=1, le=64)
    noise_var: float = Field(default=1.0, gt=0.0)
    fading: Fading = Fading.RAYLEIGH
    fading_correlation: float = Field(default=0.0, ge=0.0, lt=1.0)

    target_far: float = Field(default=0.01, gt=0.0, lt=1.0)
    sir_points: list[float] = Field(
        default_factory=lambda: [-30.0, -28.0, -26.0, -24.0, -22.0, -20.0, -18.0, -16.0]
    )
    trials: int = Field(default=1000, ge=1)
    tau: int | None = Field(default=None, ge=1)
    master_seed: int = Field(default=0, ge=0, lt=2**64)
    allow_overbound: bool = False
    scenario: Scenario = Scenario.DISTINCT
    workers: int = Field(default=1, ge=0, le=512)
    candidate_cap: int = Field(default=DEFAULT_CANDIDATE_CAP, ge=1)

    validation_samples: int = Field(default=1_000_000, ge=1)
    validation_n_rx: list[int] = Field(default_factory=lambda: [1, 2, 4])
    validation_n_users: list[int] = Field(default_factory=lambda: [1, 2, 4])

    @field_validator("validation_n_rx", "validation_n_users")
    @classmethod
    def validate_positive_list(cls, v: list[int]) -> list[int]:
        if not v or any(item < 1 for item in v):
            raise ValueError("must be a non-empty list of positive integers")
        return v

    @model_validator(mode="after")
    def validate_combination(self) -> "SimConfig":
        try:
            params = self.code_params
        except CodedStsError as e:
            raise ValueError(str(e)) from e

        if self.subcarriers is not None and self.subcarriers < self.field_order:
            raise ValueError(
                f"subcarriers={self.subcarriers} cannot carry tone indices up to "
                f"field_order-1={self.field_order - 1}"
            )
        if self.tau is not None and self.tau > self.block_length:
            raise ValueError(f"tau={self.tau} exceeds block_length={self.block_length}")
        if self.scenario is Scenario.DISTINCT and self.users > params.candidates:
            raise ValueError(
                f"users={self.users} exceeds the {params.candidates} distinct messages"
            )
        if self.scenario is Scenario.RCRM and params.candidates < 2**PAYLOAD_BITS:
            raise ValueError(
                f"rcrm scenario needs field_order^message_length >= {2**PAYLOAD_BITS}"
            )
        if self.scenario is Scenario.RCRM and self.users > 2**BSID_BITS * 4:
            raise ValueError(f"rcrm scenario supports at most {2**BSID_BITS * 4} users")

        bound = separability_bound(self.block_length, self.message_length, self.field_order)
        if self.users > bound and not self.allow_overbound:
            raise ValueError(
                f"users={self.users} exceeds the separability bound {bound}; "
                "set allow_overbound = true to run anyway"
            )
        return self

    @property
    def code_params(self) -> CodeParams:
        return CodeParams.from_orders(self.field_order, self.block_length, self.message_length)

    @property
    def resolved_subcarriers(self) -> int:
        """S, defaulting to one subcarrier per field element."""
        return self.subcarriers if self.subcarriers is not None else self.field_order

    def channel_config(self, n_rx: int | None = None) -> ChannelConfig:
        return ChannelConfig(
            n_rx=n_rx if n_rx is not None else self.n_rx,
            n_tx=self.n_tx,
            noise_var=self.noise_var,
            fading=self.fading,
            correlation=self.fading_correlation,
        )

    def decoder_config(self) -> DecoderConfig:
        if self.tau is None:
            return DecoderConfig.default_for(self.code_params, self.candidate_cap)
        return DecoderConfig(tau=self.tau, candidate_cap=self.candidate_cap)


class Config(BaseModel):
    simulation: SimConfig = Field(default_factory=SimConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
