"""Configuration manager."""

import logging
import os
from pathlib import Path
from typing import Any, List, Optional, Union

import yaml
from pydantic import ValidationError

from ..errors import ConfigurationError
from .models import ExperimentConfig

logger = logging.getLogger(__name__)


class ConfigManager:
    def __init__(self, config_path: Optional[Union[str, Path]] = None):
        self.config_path = Path(config_path) if config_path else None
        self.config: Optional[ExperimentConfig] = None

    def load_config(self) -> ExperimentConfig:
        """Load and validate configuration; no path means all defaults."""
        if self.config_path is None:
            self.config = ExperimentConfig()
            return self.config

        if not self.config_path.exists():
            raise ConfigurationError(
                f"Configuration file not found: {self.config_path}"
            )

        try:
            with open(self.config_path, "r", encoding="utf-8") as f:
                config_data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Invalid YAML syntax: {_yaml_location(e)}{e}")

        if config_data is None:
            config_data = {}
        if not isinstance(config_data, dict):
            raise ConfigurationError(
                f"{self.config_path}: top level must be a mapping of sections"
            )

        # Expand environment variables
        config_data = self._expand_env_vars(config_data)

        try:
            self.config = ExperimentConfig(**config_data)
        except ValidationError as e:
            raise ConfigurationError(
                f"Configuration validation failed: {format_validation_error(e)}"
            )
        logger.debug(f"Loaded configuration from {self.config_path}")
        return self.config

    def validate_config(self) -> List[str]:
        """Validate configuration and return any issues."""
        try:
            self.load_config()
        except ConfigurationError as e:
            return [str(e)]
        return []

    def _expand_env_vars(self, data: Any) -> Any:
        """Recursively expand environment variables in configuration."""
        if isinstance(data, dict):
            return {k: self._expand_env_vars(v) for k, v in data.items()}
        elif isinstance(data, list):
            return [self._expand_env_vars(item) for item in data]
        elif isinstance(data, str) and data.startswith("${") and data.endswith("}"):
            env_var = data[2:-1]
            return os.getenv(env_var, data)
        else:
            return data

    def get_config(self) -> ExperimentConfig:
        """Get current configuration, loading if needed."""
        if self.config is None:
            self.load_config()
        return self.config


def format_validation_error(error: ValidationError) -> str:
    """One ``field.path: message`` entry per failing field."""
    parts = []
    for item in error.errors():
        location = ".".join(str(part) for part in item["loc"]) or "<root>"
        parts.append(f"{location}: {item['msg']}")
    return "; ".join(parts)


def _yaml_location(error: yaml.YAMLError) -> str:
    mark = getattr(error, "problem_mark", None)
    if mark is None:
        return ""
    return f"line {mark.line + 1}, column {mark.column + 1}: "


def dump_config(config: ExperimentConfig, path: Union[str, Path]) -> None:
    """Write the fully resolved configuration as YAML."""
    with open(path, "w", encoding="utf-8") as f:
        yaml.safe_dump(config.model_dump(mode="json"), f, sort_keys=False)
