"""Bit-packed GF(2) vectors and incremental elimination"""

from .coordinates import b2_pairs, b2_size, b3_size, b3_triples, rank2, rank3
from .echelon import EchelonBasis, in_span, insert, rank, reduce
from .vector import DimensionMismatchError, F2Vector

__all__ = [
    "F2Vector",
    "DimensionMismatchError",
    "EchelonBasis",
    "reduce",
    "insert",
    "rank",
    "in_span",
    "rank2",
    "rank3",
    "b2_size",
    "b3_size",
    "b2_pairs",
    "b3_triples",
]
