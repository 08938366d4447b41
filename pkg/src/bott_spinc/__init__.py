"""
bott-spinc

Spin and spin^c structures on real Bott manifolds: cohomological
invariants, four independent spin^c oracles and an exhaustive census.
"""

__version__ = "0.1.0"
