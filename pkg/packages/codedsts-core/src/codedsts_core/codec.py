"""Galois-Fourier-transform Reed-Solomon codec for coded single-tone signaling.

A message m is packed into K base-D digits u, placed at positions 1..K of a
length-N transform input whose first element is zero, and mapped to the codeword
c = Z [0 u 0 ... 0]^T. Each c_n is the subcarrier index energized in OFDM symbol n.

The zero first element of the inverse transform is what makes frequency offsets
detectable: shifting every c_n by δ turns that element into δ.
"""

import logging
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache

import galois
import numpy as np

from codedsts_core.exceptions import (
    BlockLengthIncompatibleError,
    CodingError,
    DimensionMismatchError,
    InvalidParameterError,
    MessageOutOfRangeError,
)
from codedsts_core.galois_field import Field, FieldElement, field_new

logger = logging.getLogger(__name__)

CODEBOOK_CACHE_LIMIT = 65536


@dataclass(frozen=True)
class CodeParams:
    """(N, K) code over GF(D) with N | D - 1."""

    field: Field
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidParameterError("n", self.n, "block length must be positive")
        if not 1 <= self.k <= self.n:
            raise InvalidParameterError("k", self.k, f"must satisfy 1 <= K <= N={self.n}")
        if (self.field.p - 1) % self.n != 0:
            raise BlockLengthIncompatibleError(self.n, self.field.p)

    @classmethod
    def from_orders(cls, field_order: int, n: int, k: int) -> "CodeParams":
        return cls(field=field_new(field_order), n=n, k=k)

    @property
    def order(self) -> int:
        """Field order D."""
        return self.field.p

    @property
    def t(self) -> int:
        """Error-correction capability."""
        return (self.n - self.k) // 2

    @property
    def rho(self) -> int:
        """Erasure-correction capability."""
        return self.n - self.k

    @property
    def candidates(self) -> int:
        """Number of distinct messages, D^K."""
        return self.field.p**self.k

    def __str__(self) -> str:
        return f"({self.n}, {self.k}) over {self.field}"


@dataclass(frozen=True)
class Message:
    """Message integer m with its base-D digits u (least significant first)."""

    m: int
    u: tuple[FieldElement, ...]


@dataclass(frozen=True)
class StsCodeword:
    """Length-N vector of subcarrier indices, one per OFDM symbol."""

    tones: tuple[int, ...]
    field: Field

    def __post_init__(self) -> None:
        for tone in self.tones:
            if not 0 <= tone < self.field.p:
                raise InvalidParameterError("tone", tone, f"must lie in [0, {self.field.p})")

    @property
    def symbols(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(tone, self.field) for tone in self.tones)

    def __len__(self) -> int:
        return len(self.tones)

    def __iter__(self) -> Iterator[int]:
        return iter(self.tones)

    def __str__(self) -> str:
        return " ".join(str(tone) for tone in self.tones)


@dataclass(frozen=True, eq=False)
class GftContext:
    """Transform matrix Z and its inverse for one code."""

    params: CodeParams
    z: galois.FieldArray
    z_inv: galois.FieldArray


ToneVector = StsCodeword | Sequence[int] | Sequence[FieldElement]


def pack_message(m: int, params: CodeParams) -> Message:
    """Split m into K base-D digits, least significant first."""
    if not 0 <= m < params.candidates:
        raise MessageOutOfRangeError(m, params.candidates)

    digits = []
    remainder = m
    for _ in range(params.k):
        remainder, digit = divmod(remainder, params.order)
        digits.append(FieldElement(digit, params.field))
    return Message(m=m, u=tuple(digits))


def _combine_digits(digits: Sequence[FieldElement]) -> int:
    if not digits:
        return 0
    base = digits[0].field.p
    return sum(int(digit) * base**index for index, digit in enumerate(digits))


def unpack_message(msg: Message) -> int:
    """Recombine digits into m = sum u_k D^(k-1)."""
    return _combine_digits(msg.u)


@lru_cache(maxsize=32)
def gft_context(params: CodeParams) -> GftContext:
    """Build Z[i][j] = alpha^((D-1)/N * i * j) and verify its inverse.

    Raises:
        BlockLengthIncompatibleError: If N does not divide D - 1
    """
    p, n = params.order, params.n
    if (p - 1) % n != 0:
        raise BlockLengthIncompatibleError(n, p)

    gf = params.field.array
    step = (p - 1) // n
    exponents = (np.outer(np.arange(n), np.arange(n)) * step) % (p - 1)
    z = gf(params.field.alpha) ** exponents
    z_inv = np.linalg.inv(z)

    if not np.array_equal(z @ z_inv, gf.Identity(n)):
        raise CodingError(f"GFT matrix for {params} failed inverse verification")

    logger.debug(f"Built GFT context for {params}")
    return GftContext(params=params, z=z, z_inv=z_inv)


def _field_vector(c: ToneVector, params: CodeParams) -> galois.FieldArray:
    values = [int(x) for x in c]
    if len(values) != params.n:
        raise DimensionMismatchError(params.n, len(values))
    return params.field.array([v % params.order for v in values])


def _elements(vector: galois.FieldArray, field: Field) -> tuple[FieldElement, ...]:
    return tuple(FieldElement(int(v), field) for v in vector)


def encode(msg: Message, ctx: GftContext) -> StsCodeword:
    """c = Z [0 u_1 .. u_K 0 .. 0]^T."""
    params = ctx.params
    if params.k + 1 > params.n:
        raise InvalidParameterError("k", params.k, f"K + 1 must not exceed N={params.n}")
    if len(msg.u) != params.k:
        raise DimensionMismatchError(params.k, len(msg.u))

    gf = params.field.array
    v = gf.Zeros(params.n)
    v[1 : params.k + 1] = gf([int(digit) for digit in msg.u])
    c = ctx.z @ v
    return StsCodeword(tones=tuple(int(x) for x in c), field=params.field)


def inverse_gft(c: ToneVector, ctx: GftContext) -> tuple[FieldElement, ...]:
    """Zinv c; for a valid codeword this is [0 u 0 .. 0]."""
    return _elements(ctx.z_inv @ _field_vector(c, ctx.params), ctx.params.field)


def is_valid_codeword(c: ToneVector, params: CodeParams) -> bool:
    """True iff the inverse transform is zero at index 0 and at K+1 .. N-1."""
    values = [int(x) for x in c]
    if len(values) != params.n:
        raise DimensionMismatchError(params.n, len(values))
    if any(not 0 <= v < params.order for v in values):
        return False

    transformed = inverse_gft(values, gft_context(params))
    return int(transformed[0]) == 0 and all(int(x) == 0 for x in transformed[params.k + 1 :])


def extract_message(c: ToneVector, ctx: GftContext) -> Message:
    """Read the message digits back out of a valid codeword.

    Raises:
        CodingError: If c is not a codeword of this code
    """
    params = ctx.params
    transformed = inverse_gft(c, ctx)
    if int(transformed[0]) != 0 or any(int(x) != 0 for x in transformed[params.k + 1 :]):
        raise CodingError(f"[{' '.join(str(int(x)) for x in c)}] is not a codeword of {params}")
    digits = transformed[1 : params.k + 1]
    return Message(m=_combine_digits(digits), u=digits)


def estimate_offset(c_shifted: ToneVector, ctx: GftContext) -> FieldElement:
    """Frequency offset δ = N^-1 sum c'_n, the first inverse-transform element."""
    return inverse_gft(c_shifted, ctx)[0]


def shift(c: ToneVector, delta: FieldElement) -> StsCodeword:
    """Apply a frequency offset of δ subcarriers: c'_n = c_n + δ."""
    field = delta.field
    return StsCodeword(
        tones=tuple(int(FieldElement(int(x) % field.p, field) + delta) for x in c),
        field=field,
    )


def correct_offset(c_shifted: ToneVector, delta: FieldElement) -> StsCodeword:
    """Undo an estimated offset: c_n = c'_n - δ."""
    return shift(c_shifted, -delta)


def separability_bound(n: int, k: int, field_order: int) -> int:
    """Largest user count d with K <= ceil(N / d), capped at the D^K distinct messages.

    With K = 1 the inequality holds for every d, so the cap is the answer.
    """
    cap = field_order**k
    if k == 1:
        return cap
    # ceil(N/users) >= K  <=>  users < N / (K - 1)
    return min(math.ceil(n / (k - 1)) - 1, cap)


def smallest_compatible_prime(block_length: int, minimum: int = 2) -> int:
    """Smallest prime D >= minimum whose multiplicative group order is divisible by N."""
    if block_length < 1:
        raise InvalidParameterError("block_length", block_length, "must be positive")
    if minimum >= 2 and galois.is_prime(minimum):
        candidate = minimum
    else:
        candidate = galois.next_prime(minimum)
    while (candidate - 1) % block_length != 0:
        candidate = galois.next_prime(candidate)
    return int(candidate)


def codebook_block(params: CodeParams, start: int, stop: int) -> np.ndarray:
    """Codeword tones for messages start..stop-1 as an int64 array of shape (stop-start, N)."""
    if not 0 <= start <= stop <= params.candidates:
        raise MessageOutOfRangeError(stop, params.candidates)

    ctx = gft_context(params)
    gf = params.field.array
    messages = np.arange(start, stop, dtype=np.int64)
    digits = np.stack([(messages // params.order**i) % params.order for i in range(params.k)])

    v = gf.Zeros((params.n, stop - start))
    v[1 : params.k + 1, :] = gf(digits)
    tones = ctx.z @ v
    return tones.view(np.ndarray).astype(np.int64).T


@lru_cache(maxsize=16)
def codebook(params: CodeParams) -> np.ndarray:
    """Full D^K x N tone table, cached and read-only. Intended for moderate D^K."""
    table = codebook_block(params, 0, params.candidates)
    table.flags.writeable = False
    logger.debug(f"Cached codebook for {params}: {table.shape[0]} codewords")
    return table


def codeword_tones(params: CodeParams, messages: Sequence[int]) -> np.ndarray:
    """Tones of the given messages as an int64 array of shape (len(messages), N)."""
    index = np.asarray(messages, dtype=np.int64)
    if index.size and (index.min() < 0 or index.max() >= params.candidates):
        bad = int(index[(index < 0) | (index >= params.candidates)][0])
        raise MessageOutOfRangeError(bad, params.candidates)
    if params.candidates <= CODEBOOK_CACHE_LIMIT:
        return codebook(params)[index]
    if index.size == 0:
        return np.empty((0, params.n), dtype=np.int64)
    return np.concatenate([codebook_block(params, int(m), int(m) + 1) for m in index])


def max_agreement(params: CodeParams) -> int:
    """Largest number of positions in which two distinct codewords coincide."""
    table = codebook(params)
    best = 0
    for index in range(len(table) - 1):
        matches = (table[index + 1 :] == table[index]).sum(axis=1)
        best = max(best, int(matches.max()))
    return best
