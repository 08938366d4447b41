"""Single-matrix analysis service"""

from .interface import IAnalysisService
from .service import AnalysisService

__all__ = [
    "IAnalysisService",
    "AnalysisService",
]
