"""Pluggable spin^c decision procedures"""

from .deciders import BocksteinOracle, CombinatorialOracle, LinearOracle, SquareFreeOracle
from .interface import ISpincOracle

__all__ = [
    "ISpincOracle",
    "CombinatorialOracle",
    "SquareFreeOracle",
    "LinearOracle",
    "BocksteinOracle",
]
