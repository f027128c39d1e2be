"""Prime-field arithmetic GF(p).

Only prime orders are supported: a frequency offset of δ subcarriers is index
addition modulo D, which coincides with field addition only when D is prime.
"""

from dataclasses import dataclass
from functools import lru_cache

import galois

from codedsts_core.exceptions import (
    FieldMismatchError,
    InvalidParameterError,
    NonPrimeModulusError,
    ZeroInverseError,
)


@lru_cache(maxsize=64)
def field_array_class(p: int) -> type[galois.FieldArray]:
    """Return the (cached) galois array class for GF(p)."""
    return galois.GF(p)


@dataclass(frozen=True)
class Field:
    """Prime field GF(p) with a fixed primitive element alpha."""

    p: int
    alpha: int

    def __post_init__(self) -> None:
        if self.p < 2:
            raise InvalidParameterError("p", self.p, "field order must be at least 2")
        if not galois.is_prime(self.p):
            raise NonPrimeModulusError(self.p)
        # GF(2) has the single nonzero element 1
        if self.p > 2 and not galois.is_primitive_root(self.alpha, self.p):
            raise InvalidParameterError("alpha", self.alpha, f"not a primitive root mod {self.p}")

    @property
    def order(self) -> int:
        return self.p

    @property
    def array(self) -> type[galois.FieldArray]:
        """Vectorized arithmetic over this field."""
        return field_array_class(self.p)

    def element(self, value: int) -> "FieldElement":
        """Bind an integer to this field, reducing it modulo p."""
        return FieldElement(int(value) % self.p, self)

    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def __str__(self) -> str:
        return f"GF({self.p})"


@dataclass(frozen=True)
class FieldElement:
    """An element of a specific prime field."""

    value: int
    field: Field

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.field.p:
            raise InvalidParameterError("value", self.value, f"must lie in [0, {self.field.p})")

    def _check(self, other: "FieldElement") -> None:
        if self.field != other.field:
            raise FieldMismatchError(self.field.p, other.field.p)

    def _lift(self) -> galois.FieldArray:
        return self.field.array(self.value)

    def _wrap(self, result: galois.FieldArray) -> "FieldElement":
        return FieldElement(int(result), self.field)

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return self._wrap(self._lift() + other._lift())

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return self._wrap(self._lift() - other._lift())

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return self._wrap(self._lift() * other._lift())

    def __neg__(self) -> "FieldElement":
        return self._wrap(-self._lift())

    def __pow__(self, exponent: int) -> "FieldElement":
        if self.value == 0 and exponent < 0:
            raise ZeroInverseError()
        return self._wrap(self._lift() ** exponent)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise ZeroInverseError()
        return self._wrap(self._lift() ** -1)

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


@lru_cache(maxsize=64)
def field_new(p: int) -> Field:
    """Construct GF(p) with its smallest primitive root as alpha.

    Raises:
        InvalidParameterError: If p < 2
        NonPrimeModulusError: If p is composite (including prime powers such as 512)
    """
    if p < 2:
        raise InvalidParameterError("p", p, "field order must be at least 2")
    if not galois.is_prime(p):
        raise NonPrimeModulusError(p)
    return Field(p=p, alpha=int(galois.primitive_root(p)))


def fe_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def fe_sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def fe_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def fe_neg(a: FieldElement) -> FieldElement:
    return -a


def fe_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def primitive_element(field: Field) -> FieldElement:
    """Smallest element whose multiplicative order is p - 1."""
    return FieldElement(field.alpha, field)
