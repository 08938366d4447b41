"""Oracle consistency harness"""

from .interface import IVerificationService
from .service import MAX_EXHAUSTIVE_DIMENSION, VerificationService

__all__ = [
    "IVerificationService",
    "VerificationService",
    "MAX_EXHAUSTIVE_DIMENSION",
]
