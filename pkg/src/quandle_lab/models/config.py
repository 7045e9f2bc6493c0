"""
Configuration Models

Pydantic models for the quandle-lab configuration file and the
environment variables that override it.
"""

from pathlib import Path
from typing import Any, Literal, Optional

from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from quandle_lab.algebra.group_ring import AbelianCyclicCoefficients

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def default_config_path() -> Path:
    return Path.home() / ".quandle-lab" / "config.yaml"


class LabConfig(BaseModel):
    """Main quandle-lab configuration"""

    # Worker cap for coloring enumeration
    threads: int = Field(default=1, ge=1)

    # Logging
    log_level: str = "WARNING"
    log_file: Optional[Path] = None

    # Output
    output_format: Literal["text", "json"] = "text"
    default_coefficients: str = "Z"
    reports_dir: Path = Field(default_factory=lambda: Path.home() / ".quandle-lab" / "reports")

    @field_validator("log_level", mode="before")
    @classmethod
    def normalize_level(cls, v: Any) -> str:
        level = str(v).upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"log_level must be one of {', '.join(LOG_LEVELS)}, got {v}")
        return level

    @field_validator("default_coefficients")
    @classmethod
    def check_coefficients(cls, v: str) -> str:
        return AbelianCyclicCoefficients.parse(v).label

    @field_validator("log_file", "reports_dir", mode="before")
    @classmethod
    def expand_path(cls, v: Any) -> Any:
        """Expand ~ in string paths"""
        if isinstance(v, str):
            return Path(v).expanduser()
        return v


class EnvironmentSettings(BaseSettings):
    """Environment-specific settings loaded from environment variables"""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Configuration file path
    quandle_lab_config: Path = Field(
        default_factory=default_config_path, alias="QUANDLE_LAB_CONFIG"
    )

    # Overrides
    quandle_lab_log_level: Optional[str] = Field(default=None, alias="QUANDLE_LAB_LOG_LEVEL")
    quandle_lab_threads: Optional[int] = Field(default=None, ge=1, alias="QUANDLE_LAB_THREADS")
