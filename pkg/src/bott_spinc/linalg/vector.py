"""
GF(2) Vectors

Fixed-length vectors over F2 stored as a single Python int bitset.
Coordinate k lives at bit k; the int plays the role of a packed word array.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class DimensionMismatchError(ValueError):
    """Vectors of different lengths were combined"""
    pass


@dataclass(frozen=True, slots=True)
class F2Vector:
    """Immutable vector in F2^length"""

    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError(f"Vector length must be non-negative, got {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(
                f"Bits outside coordinates 0..{self.length - 1} are set"
            )

    @classmethod
    def zero(cls, length: int) -> F2Vector:
        return cls(length, 0)

    @classmethod
    def unit(cls, length: int, index: int) -> F2Vector:
        """Standard basis vector e_index (0-based)"""
        if not 0 <= index < length:
            raise IndexError(f"Coordinate {index} outside 0..{length - 1}")
        return cls(length, 1 << index)

    @classmethod
    def from_indices(cls, length: int, indices: Iterable[int]) -> F2Vector:
        """Build a vector from set coordinates; repeated indices cancel"""
        bits = 0
        for index in indices:
            if not 0 <= index < length:
                raise IndexError(f"Coordinate {index} outside 0..{length - 1}")
            bits ^= 1 << index
        return cls(length, bits)

    def is_zero(self) -> bool:
        return self.bits == 0

    def __bool__(self) -> bool:
        return self.bits != 0

    def __xor__(self, other: F2Vector) -> F2Vector:
        self._check_length(other)
        return F2Vector(self.length, self.bits ^ other.bits)

    __add__ = __xor__

    def __getitem__(self, index: int) -> int:
        if not 0 <= index < self.length:
            raise IndexError(f"Coordinate {index} outside 0..{self.length - 1}")
        return (self.bits >> index) & 1

    def lowest_set(self) -> int:
        """Index of the lowest set coordinate, -1 for the zero vector"""
        if self.bits == 0:
            return -1
        return (self.bits & -self.bits).bit_length() - 1

    def indices(self) -> Iterator[int]:
        """Set coordinates in ascending order"""
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def weight(self) -> int:
        return self.bits.bit_count()

    def to_list(self) -> list[int]:
        return [(self.bits >> k) & 1 for k in range(self.length)]

    def _check_length(self, other: F2Vector) -> None:
        if other.length != self.length:
            raise DimensionMismatchError(
                f"Vector lengths differ: {self.length} != {other.length}"
            )

    def __repr__(self) -> str:
        body = "".join(str(bit) for bit in self.to_list())
        return f"F2Vector({self.length}, {body or '-'})"
