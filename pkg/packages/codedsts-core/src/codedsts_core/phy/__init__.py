"""Physical layer: tone grids, per-tone channel, and energy detection."""

from codedsts_core.phy.channel import (
    ChannelConfig,
    Fading,
    ReceivedGrid,
    apply_channel,
    combine_energy,
    complex_gaussian,
    receive,
)
from codedsts_core.phy.detection import (
    DetectionGrid,
    detect,
    p_erasure,
    p_false_alarm,
    threshold_for_far,
    tone_power_for_sir,
)
from codedsts_core.phy.grid import ToneGrid, footprint, modulate, papr, superpose

__all__ = [
    # Grid
    "ToneGrid",
    "footprint",
    "modulate",
    "papr",
    "superpose",
    # Channel
    "ChannelConfig",
    "Fading",
    "ReceivedGrid",
    "apply_channel",
    "combine_energy",
    "complex_gaussian",
    "receive",
    # Detection
    "DetectionGrid",
    "detect",
    "p_erasure",
    "p_false_alarm",
    "threshold_for_far",
    "tone_power_for_sir",
]
