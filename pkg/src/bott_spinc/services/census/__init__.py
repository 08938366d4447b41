"""Census service"""

from .interface import ICensusService
from .service import CensusService, LongRunRefusedError

__all__ = [
    "ICensusService",
    "CensusService",
    "LongRunRefusedError",
]
