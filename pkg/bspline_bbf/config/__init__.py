"""Configuration management for bspline_bbf."""

from .manager import (
    DEFAULT_CONFIG,
    DEFAULT_CONFIG_PATH,
    LOG_LEVEL_ENV,
    ConfigManager,
    ConfigValidationError,
)
from .templates import ConfigTemplateManager

__all__ = [
    'DEFAULT_CONFIG',
    'DEFAULT_CONFIG_PATH',
    'LOG_LEVEL_ENV',
    'ConfigManager',
    'ConfigTemplateManager',
    'ConfigValidationError',
]
