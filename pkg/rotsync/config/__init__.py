"""Configuration system for rotsync."""

from .manager import ConfigManager, dump_config, format_validation_error
from .models import (
    CorrectionStrategy,
    ErrorProfile,
    EstimatorConfig,
    ExperimentConfig,
    PathConfig,
    SimConfig,
    TrackerConfig,
)

__all__ = [
    "ConfigManager",
    "dump_config",
    "format_validation_error",
    "CorrectionStrategy",
    "ErrorProfile",
    "EstimatorConfig",
    "ExperimentConfig",
    "PathConfig",
    "SimConfig",
    "TrackerConfig",
]
