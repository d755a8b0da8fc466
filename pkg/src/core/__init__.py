"""Core Application Module

This module contains the dlogctl front end:
- commands.py: subcommand handlers returning response dicts
- selftest.py: worked-example regression checks
- dlogctl.py: argument parsing, logging setup and dispatch
"""

from .commands import DlogCommands, EXIT_FAILURE, EXIT_OK, EXIT_USAGE
from .selftest import run_selftest

__all__ = ['DlogCommands', 'EXIT_OK', 'EXIT_FAILURE', 'EXIT_USAGE', 'run_selftest']
