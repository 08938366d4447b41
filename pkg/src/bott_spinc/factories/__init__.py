"""
Factory classes for Dependency Injection

Provides factory methods to create implementations based on configuration.
"""

from .oracle_factory import OracleFactory
from .service_factory import ServiceFactory

__all__ = [
    "OracleFactory",
    "ServiceFactory",
]
