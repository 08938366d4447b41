"""
Service Factory

Creates service instances from settings and oracle dependencies.
"""

from typing import Sequence

import structlog

from ..config import Settings
from ..oracles import ISpincOracle
from ..services.analysis import AnalysisService, IAnalysisService
from ..services.census import CensusService, ICensusService
from ..services.verification import IVerificationService, VerificationService

logger = structlog.get_logger(__name__)


class ServiceFactory:
    """Factory for creating service instances with proper dependency injection"""

    @staticmethod
    def create_analysis_service(
        oracles: dict[str, ISpincOracle], primary: str
    ) -> IAnalysisService:
        """
        Create analysis service.

        Args:
            oracles: Available spin^c oracles keyed by name
            primary: Name of the oracle whose answer is reported as spin^c

        Returns:
            Configured analysis service instance
        """
        logger.info("Creating analysis service", primary_oracle=primary)
        return AnalysisService(oracles, primary)

    @staticmethod
    def create_census_service(settings: Settings, timing: bool = True) -> ICensusService:
        logger.info("Creating census service", workers=settings.workers)
        return CensusService(
            workers=settings.workers,
            min_dimension=settings.min_dimension,
            max_dimension=settings.max_dimension,
            long_run_dimension=settings.long_run_dimension,
            cross_check_stride=settings.cross_check_stride,
            timing=timing,
        )

    @staticmethod
    def create_verification_service(oracles: Sequence[ISpincOracle]) -> IVerificationService:
        logger.info("Creating verification service", oracles=[oracle.name for oracle in oracles])
        return VerificationService(oracles)
