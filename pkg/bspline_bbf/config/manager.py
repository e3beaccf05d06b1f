"""Configuration loading and validation."""

import copy
import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

import yaml

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = "config/default.yaml"
LOG_LEVEL_ENV = "BSPLINE_BBF_LOG_LEVEL"

VALID_METHODS = ['new', 'deboor', 'exact']
VALID_LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']

# Used when no configuration file exists and none was requested explicitly
DEFAULT_CONFIG: Dict[str, Any] = {
    'logging': {'level': 'WARNING', 'structured': False, 'console': True, 'log_dir': None},
    'conversion': {'default_method': 'new'},
    'verification': {
        'partition_tolerance': 1e-12,
        'equivalence_tolerance': 1e-10,
        'reconstruction_tolerance': 1e-12,
        'samples_per_span': 100,
    },
    'accuracy': {'ms': [3, 5, 10, 20], 'ns': [10], 'trials': 200, 'seed': 2024,
                 'digit_cap': 18, 'dyadic_bits': 24, 'jobs': 1},
    'timing': {'ms': [3, 10, 50], 'ns': [100], 'trials': 10, 'seed': 2024,
               'repetitions': 5, 'warmup': True},
}

_NUMBER = (int, float)
_REQUIRED_FIELDS: Dict[str, Dict[str, Any]] = {
    'logging': {'level': str, 'structured': bool, 'console': bool, 'log_dir': (str, type(None))},
    'conversion': {'default_method': str},
    'verification': {
        'partition_tolerance': _NUMBER,
        'equivalence_tolerance': _NUMBER,
        'reconstruction_tolerance': _NUMBER,
        'samples_per_span': int,
    },
    'accuracy': {'ms': list, 'ns': list, 'trials': int, 'seed': int,
                 'digit_cap': _NUMBER, 'dyadic_bits': int, 'jobs': int},
    'timing': {'ms': list, 'ns': list, 'trials': int, 'seed': int,
               'repetitions': int, 'warmup': bool},
}


@dataclass
class ConfigValidationError(Exception):
    """Raised when configuration validation fails."""
    message: str
    config_path: Optional[str] = None
    field_path: Optional[str] = None
    expected_type: Optional[str] = None
    actual_value: Optional[Any] = None

    def __str__(self) -> str:
        return self.message


def _type_name(expected: Union[type, Tuple[type, ...]]) -> str:
    if isinstance(expected, tuple):
        return ' or '.join('null' if t is type(None) else t.__name__ for t in expected)
    return expected.__name__


class ConfigManager:
    """Loads a YAML configuration file and validates every section."""

    def __init__(self, config_path: Optional[str] = None):
        """Initialize ConfigManager.

        Args:
            config_path: Path to the config file; None means config/default.yaml
                with a fallback to the built-in defaults when that file is absent
        """
        self.explicit = config_path is not None
        self.config_path = config_path or DEFAULT_CONFIG_PATH
        self._config: Dict[str, Any] = {}
        self._loaded = False

    def load_config(self, config_path: Optional[str] = None) -> Dict[str, Any]:
        """Load configuration from YAML file.

        Args:
            config_path: Optional path to config file. Uses instance path if not provided.

        Returns:
            Dictionary containing loaded configuration

        Raises:
            ConfigValidationError: If config file is invalid or missing
        """
        path = config_path or self.config_path

        try:
            config_file = Path(path)
            if not config_file.exists():
                raise ConfigValidationError(
                    f"Configuration file not found: {path}",
                    config_path=path
                )

            with open(config_file, 'r', encoding='utf-8') as f:
                config_data = yaml.safe_load(f)

            if config_data is None:
                raise ConfigValidationError(
                    f"Configuration file is empty: {path}",
                    config_path=path
                )

            if not isinstance(config_data, dict):
                raise ConfigValidationError(
                    f"Configuration must be a dictionary, got {type(config_data).__name__}",
                    config_path=path,
                    expected_type="dict",
                    actual_value=type(config_data).__name__
                )

            self.validate(config_data, path)
            self._config = config_data
            self._loaded = True
            logger.info(f"Successfully loaded configuration from {path}")
            return copy.deepcopy(config_data)

        except yaml.YAMLError as e:
            raise ConfigValidationError(
                f"Invalid YAML syntax in {path}: {str(e)}",
                config_path=path
            )
        except ConfigValidationError:
            raise
        except Exception as e:
            raise ConfigValidationError(
                f"Failed to load configuration from {path}: {str(e)}",
                config_path=path
            )

    def validate(self, config: Dict[str, Any], path: str = "<memory>") -> None:
        """Check required sections, field types and value ranges."""
        for section, fields in _REQUIRED_FIELDS.items():
            if section not in config:
                raise ConfigValidationError(
                    f"Missing required configuration section '{section}' in {path}",
                    config_path=path,
                    field_path=section
                )
            if not isinstance(config[section], dict):
                raise ConfigValidationError(
                    f"Configuration section '{section}' must be a dictionary in {path}",
                    config_path=path,
                    field_path=section,
                    expected_type="dict",
                    actual_value=type(config[section]).__name__
                )
            self._validate_fields(section, config[section], fields, path)

        self._validate_logging_config(config['logging'], path)
        self._validate_conversion_config(config['conversion'], path)
        self._validate_verification_config(config['verification'], path)
        self._validate_grid_config('accuracy', config['accuracy'], path, min_degree=1)
        self._validate_grid_config('timing', config['timing'], path, min_degree=1)

        accuracy = config['accuracy']
        self._require(accuracy['digit_cap'] > 0, path, 'accuracy.digit_cap', "positive number",
                      accuracy['digit_cap'])
        self._require(8 <= accuracy['dyadic_bits'] <= 50, path, 'accuracy.dyadic_bits',
                      "integer between 8 and 50", accuracy['dyadic_bits'])
        self._require(accuracy['jobs'] >= 1, path, 'accuracy.jobs', "integer >= 1", accuracy['jobs'])
        self._require(config['timing']['repetitions'] >= 1, path, 'timing.repetitions',
                      "integer >= 1", config['timing']['repetitions'])

    def _validate_fields(self, section: str, values: Dict[str, Any],
                         fields: Dict[str, Any], path: str) -> None:
        for field, expected_type in fields.items():
            if field not in values:
                raise ConfigValidationError(
                    f"Missing required {section} config field '{field}' in {path}",
                    config_path=path,
                    field_path=f"{section}.{field}"
                )
            value = values[field]
            # bool is an int subclass; only accept it where bool is expected
            wrong_bool = isinstance(value, bool) and expected_type is not bool
            if wrong_bool or not isinstance(value, expected_type):
                raise ConfigValidationError(
                    f"{section.capitalize()} config field '{field}' must be of type "
                    f"{_type_name(expected_type)} in {path}",
                    config_path=path,
                    field_path=f"{section}.{field}",
                    expected_type=_type_name(expected_type),
                    actual_value=type(value).__name__
                )

    def _require(self, condition: bool, path: str, field_path: str, expected: str, value: Any) -> None:
        if not condition:
            raise ConfigValidationError(
                f"Config '{field_path}' must be {expected} in {path}",
                config_path=path,
                field_path=field_path,
                expected_type=expected,
                actual_value=value
            )

    def _validate_logging_config(self, logging_config: Dict[str, Any], path: str) -> None:
        level = logging_config['level'].upper()
        self._require(level in VALID_LOG_LEVELS, path, 'logging.level',
                      f"one of {VALID_LOG_LEVELS}", logging_config['level'])

    def _validate_conversion_config(self, conversion_config: Dict[str, Any], path: str) -> None:
        method = conversion_config['default_method']
        self._require(method in VALID_METHODS, path, 'conversion.default_method',
                      f"one of {VALID_METHODS}", method)

    def _validate_verification_config(self, verification_config: Dict[str, Any], path: str) -> None:
        for field in ('partition_tolerance', 'equivalence_tolerance', 'reconstruction_tolerance'):
            value = verification_config[field]
            self._require(value > 0, path, f"verification.{field}", "positive number", value)
        samples = verification_config['samples_per_span']
        self._require(samples >= 1, path, 'verification.samples_per_span', "integer >= 1", samples)

    def _validate_grid_config(self, section: str, grid: Dict[str, Any], path: str,
                              min_degree: int) -> None:
        ms, ns = grid['ms'], grid['ns']
        self._require(bool(ms) and all(isinstance(m, int) and not isinstance(m, bool) and m >= min_degree
                                       for m in ms),
                      path, f"{section}.ms", f"non-empty list of integers >= {min_degree}", ms)
        self._require(bool(ns) and all(isinstance(n, int) and not isinstance(n, bool) and n >= 1
                                       for n in ns),
                      path, f"{section}.ns", "non-empty list of integers >= 1", ns)
        self._require(grid['trials'] >= 1, path, f"{section}.trials", "integer >= 1", grid['trials'])

    def load_or_default(self) -> Dict[str, Any]:
        """Load the configured file, or the built-in defaults when the implicit default file is absent."""
        if not self.explicit and not Path(self.config_path).exists():
            logger.debug(f"No configuration at {self.config_path}, using built-in defaults")
            self._config = copy.deepcopy(DEFAULT_CONFIG)
            self._loaded = True
        else:
            self.load_config()
        return self.get_config()

    def get_config(self) -> Dict[str, Any]:
        """Get current configuration with environment overrides applied. Loads if not already loaded."""
        if not self._loaded:
            self.load_config()
        config = copy.deepcopy(self._config)
        level = os.environ.get(LOG_LEVEL_ENV)
        if level:
            config['logging']['level'] = level.upper()
        return config

    def get_section(self, section: str) -> Dict[str, Any]:
        """Get specific configuration section."""
        config = self.get_config()
        if section not in config:
            raise ConfigValidationError(f"Configuration section '{section}' not found")
        return config[section]

    def validate_config_file(self, config_path: str) -> bool:
        """Validate a configuration file without loading it permanently."""
        try:
            ConfigManager(config_path).load_config()
            return True
        except ConfigValidationError:
            return False
