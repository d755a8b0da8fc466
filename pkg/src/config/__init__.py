"""
Configuration Module

This module handles configuration file parsing, validation, and management.

## Files

- `parser.py` - Configuration file parsing (YAML)
- `validator.py` - Configuration validation logic
- `defaults.py` - Default configuration values and experiment presets
- `manager.py` - Configuration management and access
- `__init__.py` - Module initialization
"""

from .parser import ConfigError, ConfigParser
from .validator import ConfigValidator
from .manager import ConfigManager

__all__ = ['ConfigError', 'ConfigParser', 'ConfigValidator', 'ConfigManager']
