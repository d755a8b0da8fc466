"""Configuration validation module for dlogkit."""
from fractions import Fraction
from typing import Any, List, Tuple

from .defaults import (
    SOLVER_DEFAULTS,
    BENCH_DEFAULTS,
    LOGGING_DEFAULTS,
    EXPERIMENT_DEFAULTS,
    get_algorithms,
    get_bound_formulas
)

SECTIONS = ('solver', 'bench', 'logging', 'experiments')


def _type_name(expected) -> str:
    if isinstance(expected, tuple):
        return ' or '.join(t.__name__ for t in expected)
    return expected.__name__


def _is_positive_rational(value: Any) -> bool:
    if isinstance(value, bool):
        return False
    try:
        return Fraction(str(value).strip()) > 0
    except (ValueError, ZeroDivisionError):
        return False


class ConfigValidator:
    """Validates dlogkit configuration files."""

    def __init__(self):
        self.errors = []

    def validate_config(self, config: dict) -> Tuple[bool, List[str]]:
        """Validate the complete configuration."""
        self.errors = []

        if not isinstance(config, dict):
            self.errors.append("Configuration must be a dictionary")
            return False, self.errors

        for section in config:
            if section not in SECTIONS:
                self.errors.append(f"Unknown section '{section}'")

        self.validate_solver(config.get('solver', {}))
        self.validate_bench(config.get('bench', {}))
        self._validate_section('logging', config.get('logging', {}), LOGGING_DEFAULTS)
        self.validate_experiments(config.get('experiments', {}))

        return len(self.errors) == 0, self.errors

    def validate_solver(self, config: dict) -> None:
        self._validate_section('solver', config, SOLVER_DEFAULTS)
        multiplier = config.get('bound_multiplier')
        if multiplier is not None and not _is_positive_rational(multiplier):
            self.errors.append(f"solver.bound_multiplier must be a positive rational, got {multiplier!r}")

    def validate_bench(self, config: dict) -> None:
        self._validate_section('bench', config, BENCH_DEFAULTS)
        self._validate_formulas('bench.formulas', config.get('formulas'))

    def validate_experiments(self, experiments: dict) -> None:
        if not isinstance(experiments, dict):
            return
        for name, experiment in experiments.items():
            if not isinstance(experiment, dict):
                continue
            context = f"experiments.{name}"
            self._validate_section(context, experiment, EXPERIMENT_DEFAULTS)
            for key in ('bits', 'multipliers', 'algorithms'):
                if isinstance(experiment.get(key), list) and not experiment[key]:
                    self.errors.append(f"{context}.{key} must not be empty")
            for multiplier in experiment.get('multipliers') or []:
                if not _is_positive_rational(multiplier):
                    self.errors.append(f"{context}.multipliers entry {multiplier!r} is not a positive rational")
            self._validate_formulas(f"{context}.formulas", experiment.get('formulas'))

    def _validate_formulas(self, context: str, formulas: Any) -> None:
        if not isinstance(formulas, dict):
            return
        for algorithm, formula in formulas.items():
            if algorithm not in get_algorithms():
                self.errors.append(f"{context} names unknown algorithm '{algorithm}'")
            if formula not in get_bound_formulas():
                self.errors.append(
                    f"{context}.{algorithm} must be one of: {', '.join(get_bound_formulas())}"
                )

    def _validate_section(self, section_name: str, config: dict, schema: dict) -> None:
        """Generic section validator using schema."""
        if not isinstance(config, dict):
            self.errors.append(f"'{section_name}' section must be a dictionary")
            return

        for key in config:
            if key not in schema:
                self.errors.append(f"{section_name}.{key} is not a known option")

        for key, field_schema in schema.items():
            value = config.get(key, field_schema.get('default'))

            if value is None:
                if field_schema.get('required', False):
                    self.errors.append(f"{section_name}.{key} is required")
                continue

            if not isinstance(value, field_schema['type']):
                self.errors.append(
                    f"{section_name}.{key} must be of type {_type_name(field_schema['type'])}"
                )
                continue

            values = value if isinstance(value, list) else [value]
            if isinstance(value, list) and 'element_type' in field_schema:
                if not all(isinstance(x, field_schema['element_type']) for x in value):
                    self.errors.append(
                        f"{section_name}.{key} must be a list of {_type_name(field_schema['element_type'])}"
                    )
                    continue

            for item in values:
                if isinstance(item, (int, float)) and not isinstance(item, bool):
                    min_val = field_schema.get('min')
                    max_val = field_schema.get('max')
                    if min_val is not None and item < min_val:
                        self.errors.append(f"{section_name}.{key} must be >= {min_val}")
                    if max_val is not None and item > max_val:
                        self.errors.append(f"{section_name}.{key} must be <= {max_val}")

                if 'choices' in field_schema and item not in field_schema['choices']:
                    self.errors.append(
                        f"{section_name}.{key} must be one of: {', '.join(field_schema['choices'])}"
                    )
