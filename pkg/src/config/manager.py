"""Configuration management module for dlogkit."""
import copy
import logging
import os
from typing import Dict, Any, Optional, List

from .parser import ConfigError, ConfigParser
from .defaults import DEFAULT_CONFIG_FILE


class ConfigManager:
    """Manages configuration loading, validation, and access.

    A missing file means built-in defaults. A file that fails to parse or
    validate raises ConfigError.
    """

    def __init__(self, filepath: Optional[str] = None):
        self.logger = logging.getLogger(__name__)
        self.config_file = filepath or DEFAULT_CONFIG_FILE
        self.parser = ConfigParser(self.config_file)
        self.from_file = os.path.exists(self.config_file)

        if self.from_file:
            success, result = self.parser.parse_file()
            if not success:
                raise ConfigError(
                    f"{self.config_file}: {result['error']}",
                    result.get('details') or []
                )
            self.config = result
        else:
            self.logger.warning(f"Configuration file {self.config_file} not found, using defaults")
            self.config = self.parser.defaults_only()

    def resolve_path(self, path: Optional[str]) -> Optional[str]:
        """Resolve a path relative to the configuration file's directory."""
        if not path:
            return path
        if not os.path.isabs(path):
            config_dir = os.path.dirname(os.path.abspath(self.config_file))
            path = os.path.join(config_dir, path)
        return os.path.normpath(path)

    def get_solver_config(self) -> Dict[str, Any]:
        return dict(self.config.get('solver', {}))

    def get_bench_config(self) -> Dict[str, Any]:
        return copy.deepcopy(self.config.get('bench', {}))

    def get_logging_config(self) -> Dict[str, Any]:
        logging_config = dict(self.config.get('logging', {}))
        if logging_config.get('file'):
            logging_config['file'] = self.resolve_path(logging_config['file'])
        return logging_config

    def get_experiment(self, name: str) -> Optional[Dict[str, Any]]:
        experiment = self.config.get('experiments', {}).get(name)
        return copy.deepcopy(experiment) if experiment is not None else None

    def experiment_names(self) -> List[str]:
        return sorted(self.config.get('experiments', {}))

    def get_all_experiments(self) -> Dict[str, Dict[str, Any]]:
        return copy.deepcopy(self.config.get('experiments', {}))

    def get_raw_config(self) -> Dict[str, Any]:
        return copy.deepcopy(self.config)
