"""
Oracle Factory

Creates spin^c oracle instances based on configuration.
"""

import structlog

from ..oracles import (
    BocksteinOracle,
    CombinatorialOracle,
    ISpincOracle,
    LinearOracle,
    SquareFreeOracle,
)

logger = structlog.get_logger(__name__)


class OracleFactory:
    """Factory for creating spin^c oracles"""

    _ORACLES: dict[str, type[ISpincOracle]] = {
        "combinatorial": CombinatorialOracle,
        "theorem": SquareFreeOracle,
        "linear": LinearOracle,
        "bockstein": BocksteinOracle,
    }

    @staticmethod
    def create(name: str) -> ISpincOracle:
        """
        Create the oracle registered under name.

        Raises:
            ValueError: If the oracle name is not supported
        """
        key = name.lower()
        if key not in OracleFactory._ORACLES:
            raise ValueError(f"Unsupported spin^c oracle: {name}")
        logger.debug("Creating spin^c oracle", oracle=key)
        return OracleFactory._ORACLES[key]()

    @staticmethod
    def create_all() -> dict[str, ISpincOracle]:
        """Every oracle keyed by name, in registration order"""
        return {name: OracleFactory.create(name) for name in OracleFactory._ORACLES}

    @staticmethod
    def get_available_oracles() -> list[str]:
        return list(OracleFactory._ORACLES)
