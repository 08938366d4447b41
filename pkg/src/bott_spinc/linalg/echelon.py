"""
Incremental Gaussian Elimination over F2

Maintains a fully reduced row-echelon set of independent vectors so that
rank and span-membership queries cost one pass over the rows.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Iterable, Sequence

from .vector import DimensionMismatchError, F2Vector


class EchelonBasis:
    """
    Independent vectors in reduced row-echelon form.

    rows[k] has its lowest set coordinate at pivots[k], pivots are strictly
    increasing and no other row has a set bit at pivots[k]. The basis is the
    only mutable object of the package; each caller owns its own instance.
    """

    __slots__ = ("length", "_rows", "_pivots")

    def __init__(self, length: int, vectors: Iterable[F2Vector] = ()):
        if length < 0:
            raise ValueError(f"Basis length must be non-negative, got {length}")
        self.length = length
        self._rows: list[F2Vector] = []
        self._pivots: list[int] = []
        for vector in vectors:
            self.insert(vector)

    @property
    def rows(self) -> tuple[F2Vector, ...]:
        return tuple(self._rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(self._pivots)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, vector: F2Vector) -> F2Vector:
        """
        Residual of vector after elimination against every row.

        Rows are applied lowest pivot first. The residual is zero iff the
        vector lies in the span of the basis; the basis is not modified.

        Raises:
            DimensionMismatchError: If vector.length differs from the basis length
        """
        self._check(vector)
        bits = vector.bits
        for row, pivot in zip(self._rows, self._pivots):
            if (bits >> pivot) & 1:
                bits ^= row.bits
        return F2Vector(self.length, bits)

    def contains(self, vector: F2Vector) -> bool:
        return self.reduce(vector).is_zero()

    def insert(self, vector: F2Vector) -> bool:
        """
        Add vector to the basis if it is independent of the current rows.

        Returns:
            True if the residual was nonzero and has been appended
        """
        residual = self.reduce(vector)
        if residual.is_zero():
            return False

        pivot = residual.lowest_set()
        # keep the basis fully reduced: clear the new pivot from older rows
        for k, row in enumerate(self._rows):
            if (row.bits >> pivot) & 1:
                self._rows[k] = row ^ residual

        position = bisect_left(self._pivots, pivot)
        self._rows.insert(position, residual)
        self._pivots.insert(position, pivot)
        return True

    def copy(self) -> EchelonBasis:
        clone = EchelonBasis(self.length)
        clone._rows = list(self._rows)
        clone._pivots = list(self._pivots)
        return clone

    def _check(self, vector: F2Vector) -> None:
        if vector.length != self.length:
            raise DimensionMismatchError(
                f"Vector length {vector.length} does not match basis length {self.length}"
            )

    def __repr__(self) -> str:
        return f"EchelonBasis(length={self.length}, rank={self.rank}, pivots={self._pivots})"


def reduce(basis: EchelonBasis, vector: F2Vector) -> F2Vector:
    return basis.reduce(vector)


def insert(basis: EchelonBasis, vector: F2Vector) -> tuple[EchelonBasis, bool]:
    """Insert vector into basis in place; returns the same basis and the inserted flag"""
    inserted = basis.insert(vector)
    return basis, inserted


def rank(vectors: Sequence[F2Vector]) -> int:
    """
    Rank of the subspace spanned by vectors.

    Raises:
        DimensionMismatchError: If the vectors have mixed lengths
    """
    if not vectors:
        return 0
    length = vectors[0].length
    for vector in vectors:
        if vector.length != length:
            raise DimensionMismatchError(
                f"Mixed vector lengths: {length} and {vector.length}"
            )
    return EchelonBasis(length, vectors).rank


def in_span(vector: F2Vector, vectors: Sequence[F2Vector]) -> bool:
    """Check whether vector is in the span of vectors"""
    return EchelonBasis(vector.length, vectors).contains(vector)
