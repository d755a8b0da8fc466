"""Configuration parser module for dlogkit.

This module handles YAML configuration file parsing and provides methods
to access different sections of the configuration.
"""

import copy
import os
import re
import yaml
from typing import Dict, Any, Tuple, List

from .validator import ConfigValidator
from .defaults import (
    SOLVER_DEFAULTS,
    BENCH_DEFAULTS,
    LOGGING_DEFAULTS,
    EXPERIMENT_DEFAULTS,
    DEFAULT_EXPERIMENTS
)


class ConfigError(Exception):

    def __init__(self, message: str, details: List[str] = None):
        super().__init__(message)
        self.details = list(details or [])


class ConfigParser:

    ENV_VAR_PATTERN = re.compile(r'\$\{([^}]+)\}|\$([a-zA-Z_][a-zA-Z0-9_]*)')

    def __init__(self, filepath):
        self.validator = ConfigValidator()
        self.config = {}
        self._parse_errors: List[str] = []
        self.filepath = filepath

    def parse_file(self) -> Tuple[bool, Dict[str, Any]]:
        """Load, default and validate the file; ``(True, config)`` or ``(False, error)``."""
        self._parse_errors = []

        try:
            if not os.path.exists(self.filepath):
                raise ConfigError(f"Configuration file not found: {self.filepath}")

            if not os.access(self.filepath, os.R_OK):
                raise ConfigError(f"Configuration file is not readable: {self.filepath}")

            with open(self.filepath, 'r') as f:
                try:
                    config = yaml.safe_load(f)
                except yaml.YAMLError as e:
                    raise ConfigError(f"Invalid YAML format: {self._format_yaml_error(e)}")

            if config is None:
                config = {}

            if not isinstance(config, dict):
                raise ConfigError("Configuration must be a dictionary")

            return True, self.load_dict(self.expand_env_vars(config))

        except ConfigError as e:
            return False, {
                "error": str(e),
                "details": e.details or self._parse_errors or None
            }
        except OSError as e:
            return False, {"error": f"Cannot read configuration: {e}"}

    def load_dict(self, config: Dict[str, Any]) -> Dict[str, Any]:
        """Apply defaults to an already loaded mapping and validate it."""
        self._parse_errors = []
        self.config = self._apply_defaults(copy.deepcopy(config))
        if self._parse_errors:
            raise ConfigError("Configuration structure is invalid", self._parse_errors)

        is_valid, errors = self.validator.validate_config(self.config)
        if not is_valid:
            self._parse_errors.extend(errors)
            raise ConfigError("Configuration validation failed", errors)
        return self.config

    def defaults_only(self) -> Dict[str, Any]:
        return self.load_dict({})

    def expand_env_vars(self, value: Any) -> Any:
        """Expand ``${VAR}`` and ``$VAR`` references in string values, before validation."""
        if isinstance(value, str):
            def replace_var(match):
                var_name = match.group(1) or match.group(2)
                return os.environ.get(var_name, '')
            return self.ENV_VAR_PATTERN.sub(replace_var, value)
        elif isinstance(value, dict):
            return {k: self.expand_env_vars(v) for k, v in value.items()}
        elif isinstance(value, list):
            return [self.expand_env_vars(item) for item in value]
        return value

    def _format_yaml_error(self, error: yaml.YAMLError) -> str:
        """Format YAML error message."""
        mark = getattr(error, 'problem_mark', None)
        if mark is not None:
            return f"line {mark.line + 1}, column {mark.column + 1}: {error.problem}"
        return str(error)

    def _apply_defaults(self, config: Dict[str, Any]) -> Dict[str, Any]:
        """Apply default values to missing configuration options."""
        result = config

        self._apply_section_defaults(result, 'solver', SOLVER_DEFAULTS)
        self._apply_section_defaults(result, 'bench', BENCH_DEFAULTS)
        self._apply_section_defaults(result, 'logging', LOGGING_DEFAULTS)

        if result.get('experiments') is None:
            result['experiments'] = copy.deepcopy(DEFAULT_EXPERIMENTS)
        if not isinstance(result['experiments'], dict):
            self._parse_errors.append("'experiments' section must be a dictionary")
            result['experiments'] = {}

        for name, experiment in result['experiments'].items():
            if not isinstance(experiment, dict):
                self._parse_errors.append(f"Experiment '{name}' configuration must be a dictionary")
                continue
            for key, schema in EXPERIMENT_DEFAULTS.items():
                if schema.get('required', False) and key not in experiment:
                    self._parse_errors.append(f"Missing required field '{key}' in experiments.{name}")
                elif key not in experiment and 'default' in schema:
                    experiment[key] = copy.deepcopy(schema['default'])

        return result

    def _apply_section_defaults(self, config: Dict[str, Any], section: str, defaults: Dict[str, Any]) -> None:
        """Apply defaults to a configuration section."""
        if config.get(section) is None:
            config[section] = {}

        section_config = config[section]
        if not isinstance(section_config, dict):
            self._parse_errors.append(f"'{section}' section must be a dictionary")
            config[section] = {}
            section_config = config[section]

        for key, schema in defaults.items():
            if key not in section_config and 'default' in schema:
                section_config[key] = copy.deepcopy(schema['default'])
