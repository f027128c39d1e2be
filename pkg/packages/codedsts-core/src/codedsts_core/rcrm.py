"""Resource coordination request messages (RCRM).

A 9-bit payload carried by one coded STS signal::

    bit  8 7 | 6 5 4 | 3 2 | 1 0
         rid | prio  | sinr| bshash

The serving base station identity is too long for the payload, so only a 2-bit
time-varying hash of it is sent. Two users of different cells that pick identical
messages send identical tones, which merge at the receiver into one message.
"""

from dataclasses import dataclass

from codedsts_core.exceptions import (
    FieldOverflowError,
    InvalidParameterError,
    MessageOutOfRangeError,
)

RESOURCE_ID_BITS = 2
PRIORITY_BITS = 3
TARGET_SINR_BITS = 2
BS_HASH_BITS = 2
PAYLOAD_BITS = RESOURCE_ID_BITS + PRIORITY_BITS + TARGET_SINR_BITS + BS_HASH_BITS
BSID_BITS = 9

_KNUTH_MULTIPLIER = 2654435761
_TIMESLOT_STRIDE = 40503
_WORD = 2**32


@dataclass(frozen=True)
class Rcrm:
    resource_id: int
    priority: int
    target_sinr: int
    bs_hash: int

    def __post_init__(self) -> None:
        for name, bits in (
            ("resource_id", RESOURCE_ID_BITS),
            ("priority", PRIORITY_BITS),
            ("target_sinr", TARGET_SINR_BITS),
            ("bs_hash", BS_HASH_BITS),
        ):
            value = getattr(self, name)
            if not 0 <= value < 2**bits:
                raise FieldOverflowError(name, value, bits)

    def __str__(self) -> str:
        return (
            f"rid={self.resource_id} prio={self.priority} "
            f"sinr={self.target_sinr} bshash={self.bs_hash}"
        )


@dataclass(frozen=True)
class BaseStationId:
    id: int

    def __post_init__(self) -> None:
        if not 0 <= self.id < 2**BSID_BITS:
            raise InvalidParameterError("bsid", self.id, f"must lie in [0, {2**BSID_BITS})")


def rcrm_pack(r: Rcrm) -> int:
    """Fields to message integer, resource ID in the high bits."""
    return (
        r.resource_id << (PRIORITY_BITS + TARGET_SINR_BITS + BS_HASH_BITS)
        | r.priority << (TARGET_SINR_BITS + BS_HASH_BITS)
        | r.target_sinr << BS_HASH_BITS
        | r.bs_hash
    )


def rcrm_unpack(m: int) -> Rcrm:
    if not 0 <= m < 2**PAYLOAD_BITS:
        raise MessageOutOfRangeError(m, 2**PAYLOAD_BITS)
    return Rcrm(
        resource_id=m >> (PRIORITY_BITS + TARGET_SINR_BITS + BS_HASH_BITS),
        priority=(m >> (TARGET_SINR_BITS + BS_HASH_BITS)) & (2**PRIORITY_BITS - 1),
        target_sinr=(m >> BS_HASH_BITS) & (2**TARGET_SINR_BITS - 1),
        bs_hash=m & (2**BS_HASH_BITS - 1),
    )


def hash_bsid(bsid: BaseStationId, timeslot: int) -> int:
    """2-bit multiplicative hash of a base station identity that changes every timeslot.

    The timeslot offsets the key before the Knuth multiply so successive slots move
    the product by a fixed odd stride and every id's bucket rotates over time.
    """
    if timeslot < 0:
        raise InvalidParameterError("timeslot", timeslot, "must be non-negative")
    key = bsid.id + timeslot * _TIMESLOT_STRIDE
    return ((key * _KNUTH_MULTIPLIER) % _WORD) >> (32 - BS_HASH_BITS)


def collides(a: Rcrm, b: Rcrm) -> bool:
    """Identical payloads produce identical tones and cannot be told apart."""
    return rcrm_pack(a) == rcrm_pack(b)
