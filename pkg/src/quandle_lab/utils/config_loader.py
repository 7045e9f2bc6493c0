"""
Configuration Loader

Loads quandle-lab configuration from a YAML file and applies environment
overrides. A missing file is not an error: defaults apply.
"""

from pathlib import Path
from typing import Optional

import yaml
from pydantic import ValidationError

from quandle_lab.models.config import EnvironmentSettings, LabConfig
from quandle_lab.utils.logger import get_logger

logger = get_logger(__name__)


class ConfigLoader:
    """Loads and validates quandle-lab configuration"""

    def __init__(self, config_path: Optional[Path] = None):
        """
        Initialize configuration loader

        Args:
            config_path: Path to configuration file. If None, uses QUANDLE_LAB_CONFIG
                or ~/.quandle-lab/config.yaml.
        """
        self.env_settings = EnvironmentSettings()
        self.config_path = Path(config_path or self.env_settings.quandle_lab_config).expanduser()
        self._config: Optional[LabConfig] = None

    def load(self) -> LabConfig:
        """
        Load configuration from file, falling back to defaults

        Raises:
            ValueError: If the file is not valid YAML or fails validation
        """
        config_data = {}
        if self.config_path.exists():
            try:
                with open(self.config_path, "r", encoding="utf-8") as f:
                    config_data = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ValueError(f"Invalid YAML in {self.config_path}: {e}") from e
            logger.debug(f"Loaded configuration from {self.config_path}")
        else:
            logger.debug(f"No configuration at {self.config_path}; using defaults")

        if not isinstance(config_data, dict):
            raise ValueError(f"Configuration in {self.config_path} must be a mapping")
        try:
            config = LabConfig(**config_data)
        except ValidationError as e:
            raise ValueError(f"Invalid configuration in {self.config_path}: {e}") from e

        # Apply environment overrides
        if self.env_settings.quandle_lab_log_level:
            config.log_level = self.env_settings.quandle_lab_log_level.upper()
        if self.env_settings.quandle_lab_threads:
            config.threads = min(config.threads, self.env_settings.quandle_lab_threads)

        self._config = config
        return config

    def create_default(self, force: bool = False) -> Path:
        """
        Write a default configuration file

        Args:
            force: Overwrite an existing file

        Raises:
            FileExistsError: If the file exists and force is False
        """
        if self.config_path.exists() and not force:
            raise FileExistsError(f"Configuration already exists: {self.config_path}")
        self.save(LabConfig())
        return self.config_path

    def save(self, config: LabConfig) -> None:
        """Save configuration to file"""
        self.config_path.parent.mkdir(parents=True, exist_ok=True)
        config_dict = config.model_dump(mode="json", exclude_none=True)
        with open(self.config_path, "w", encoding="utf-8") as f:
            yaml.safe_dump(config_dict, f, default_flow_style=False, sort_keys=False)
        logger.info(f"Configuration saved to {self.config_path}")

    def get_config(self) -> LabConfig:
        """
        Get loaded configuration

        Raises:
            RuntimeError: If configuration hasn't been loaded
        """
        if self._config is None:
            raise RuntimeError("Configuration not loaded. Call load() first.")
        return self._config


# Global config loader instance
_config_loader: Optional[ConfigLoader] = None


def get_config_loader(config_path: Optional[Path] = None) -> ConfigLoader:
    """
    Get global configuration loader instance

    Args:
        config_path: Optional custom config path; replaces the global loader
    """
    global _config_loader
    if _config_loader is None or config_path is not None:
        _config_loader = ConfigLoader(config_path)
    return _config_loader


def get_config() -> LabConfig:
    """Loaded configuration, loading it on first use"""
    loader = get_config_loader()
    if loader._config is None:
        loader.load()
    return loader.get_config()


def reset_config_loader() -> None:
    """Forget the global loader so the next access re-reads the environment"""
    global _config_loader
    _config_loader = None
