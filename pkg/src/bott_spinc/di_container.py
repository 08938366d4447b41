"""
Dependency Injection Container

Centralized dependency resolution for the CLI.
"""

from typing import Any, Optional

import structlog

from .config import Settings, get_settings
from .factories import OracleFactory, ServiceFactory
from .oracles import ISpincOracle
from .services.analysis import IAnalysisService
from .services.census import ICensusService
from .services.verification import IVerificationService

logger = structlog.get_logger(__name__)


class DIContainer:
    """
    Dependency Injection Container for managing service dependencies.

    Provides lazy initialization and caching of oracles and services.
    """

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()
        self._services: dict[str, Any] = {}

        logger.debug(
            "DI Container initialized",
            workers=self.settings.workers,
            spinc_oracle=self.settings.spinc_oracle,
        )

    def get_oracles(self) -> dict[str, ISpincOracle]:
        """Get every spin^c oracle keyed by name (lazy initialization)"""
        if "oracles" not in self._services:
            self._services["oracles"] = OracleFactory.create_all()
        oracles: dict[str, ISpincOracle] = self._services["oracles"]
        return oracles

    def get_analysis_service(self) -> IAnalysisService:
        if "analysis_service" not in self._services:
            self._services["analysis_service"] = ServiceFactory.create_analysis_service(
                self.get_oracles(), self.settings.spinc_oracle
            )
        service: IAnalysisService = self._services["analysis_service"]
        return service

    def get_census_service(self) -> ICensusService:
        if "census_service" not in self._services:
            self._services["census_service"] = ServiceFactory.create_census_service(self.settings)
        service: ICensusService = self._services["census_service"]
        return service

    def get_verification_service(self) -> IVerificationService:
        if "verification_service" not in self._services:
            self._services["verification_service"] = (
                ServiceFactory.create_verification_service(list(self.get_oracles().values()))
            )
        service: IVerificationService = self._services["verification_service"]
        return service

    def get_container_info(self) -> dict[str, Any]:
        """Get container status and dependency information"""
        return {
            "cached_services": list(self._services.keys()),
            "settings": {
                "workers": self.settings.workers,
                "spinc_oracle": self.settings.spinc_oracle,
                "output_format": self.settings.output_format,
            },
        }
