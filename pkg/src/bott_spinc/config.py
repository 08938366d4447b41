"""
Configuration management for bott-spinc
"""

import os
from pathlib import Path
from typing import Literal, Optional

from pydantic import Field, ValidationError, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

OutputFormat = Literal["table", "csv", "json-lines"]
OracleName = Literal["combinatorial", "theorem", "linear", "bockstein"]
LogLevel = Literal["debug", "info", "warning", "error"]


class Settings(BaseSettings):
    """Application settings loaded from BOTT_* environment variables"""

    # Census
    workers: int = Field(default_factory=lambda: os.cpu_count() or 1, ge=1)
    min_dimension: int = Field(default=4, ge=2)
    max_dimension: int = Field(default=10, le=10)
    long_run_dimension: int = 10
    cross_check_stride: int = Field(default=1024, ge=1)

    # Verification harness
    verify_seed: int = 0
    verify_samples: int = Field(default=1000, ge=0)
    verify_max_exhaustive: int = Field(default=5, ge=4, le=7)

    # Reporting
    output_format: OutputFormat = "table"
    spinc_oracle: OracleName = "combinatorial"
    log_level: LogLevel = "warning"

    model_config = SettingsConfigDict(
        env_prefix="BOTT_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    @field_validator("log_level", mode="before")
    @classmethod
    def _lower_log_level(cls, value: object) -> object:
        return value.lower() if isinstance(value, str) else value

    @model_validator(mode="after")
    def _check_dimensions(self) -> "Settings":
        if self.min_dimension > self.max_dimension:
            raise ValueError(
                f"min_dimension {self.min_dimension} exceeds max_dimension {self.max_dimension}"
            )
        return self


# Global settings instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get application settings singleton"""
    global _settings
    if _settings is None:
        load_dotenv_if_exists()
        try:
            _settings = Settings()
        except ValidationError as e:
            raise ValueError(f"Invalid BOTT_* configuration: {e}") from e
    return _settings


def reset_settings() -> None:
    """Drop the cached settings so the next get_settings() re-reads the environment"""
    global _settings
    _settings = None


def load_dotenv_if_exists() -> None:
    """Load .env file if it exists"""
    from dotenv import load_dotenv

    env_path = Path(".env")
    if env_path.exists():
        load_dotenv(env_path)
    else:
        # Try to load from parent directories
        current = Path.cwd()
        for parent in [current] + list(current.parents):
            env_path = parent / ".env"
            if env_path.exists():
                load_dotenv(env_path)
                break
