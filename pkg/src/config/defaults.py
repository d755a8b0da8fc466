"""Default configuration values and validation schemas for dlogkit."""
from typing import Any, Dict, List

DEFAULT_CONFIG_FILE = 'config_file/dlogkit.yaml'


def get_algorithms() -> List[str]:
    """Algorithm tags accepted everywhere an algorithm is named."""
    return ['dic', 'dic-parallel', 'ic', 'bsgs', 'rho', 'ph']


def get_bound_formulas() -> List[str]:
    return ['sqrt-half', 'half-sqrt']


def get_log_levels() -> List[str]:
    return ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']


# Solver budgets and defaults
SOLVER_DEFAULTS = {
    'max_candidates': {
        'default': 10_000_000,
        'type': int,
        'min': 1,
        'help': 'Smoothness candidates tested per base before giving up'
    },
    'max_rounds': {
        'default': 50,
        'type': int,
        'min': 1,
        'help': 'Relation rounds before giving up'
    },
    'generality_rounds': {
        'default': 3,
        'type': int,
        'min': 1,
        'help': 'Rounds with unverifiable forced logs before index calculus reports a generality failure'
    },
    'residue_cap': {
        'default': 16,
        'type': int,
        'min': 1,
        'max': 4096,
        'help': 'Largest candidate list enumerated for an ambiguous log'
    },
    'rho_restarts': {
        'default': 20,
        'type': int,
        'min': 1,
        'help': 'Pollard rho walks before giving up'
    },
    'executor': {
        'default': 'thread',
        'type': str,
        'choices': ['thread', 'process'],
        'help': 'Executor used by dic-parallel for the two per-base pipelines'
    },
    'default_algorithm': {
        'default': 'dic',
        'type': str,
        'choices': get_algorithms(),
        'help': 'Algorithm used by solve when none is given'
    },
    'bound_formula': {
        'default': 'sqrt-half',
        'type': str,
        'choices': get_bound_formulas(),
        'help': 'Smoothness bound formula'
    },
    'bound_multiplier': {
        'default': '0.5',
        'type': (str, int, float),
        'help': 'Multiplier applied to the bound formula'
    },
    'factorize_modulus': {
        'default': True,
        'type': bool,
        'help': 'Factor the relation modulus instead of splitting it with gcds'
    }
}

# Sweep defaults
BENCH_DEFAULTS = {
    'trials': {
        'default': 20,
        'type': int,
        'min': 1,
        'help': 'Trials per grid cell'
    },
    'workers': {
        'default': 1,
        'type': int,
        'min': 1,
        'max': 256,
        'help': 'Worker processes for a sweep (1 runs inline)'
    },
    'seed': {
        'default': 20240601,
        'type': int,
        'min': 0,
        'max': 2 ** 64 - 1,
        'help': 'Sweep seed'
    },
    'progress_interval': {
        'default': 5,
        'type': (int, float),
        'min': 0,
        'help': 'Seconds between progress log lines (0 disables)'
    },
    'formulas': {
        'default': {},
        'type': dict,
        'help': 'Per-algorithm bound formula, e.g. {ic: half-sqrt}'
    }
}

LOGGING_DEFAULTS = {
    'level': {
        'default': 'INFO',
        'type': str,
        'choices': get_log_levels(),
        'help': 'Log level'
    },
    'file': {
        'default': None,
        'type': str,
        'help': 'Optional log file, in addition to stderr'
    },
    'format': {
        'default': '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        'type': str,
        'help': 'Log record format'
    },
    'datefmt': {
        'default': '%Y-%m-%d %H:%M:%S',
        'type': str,
        'help': 'Timestamp format'
    }
}

# Schema of one entry in the experiments section
EXPERIMENT_DEFAULTS = {
    'description': {
        'default': '',
        'type': str,
        'help': 'One-line description'
    },
    'bits': {
        'required': True,
        'type': list,
        'element_type': int,
        'min': 12,
        'max': 80,
        'help': 'Bit lengths of p (p - 1 must stay within the 80-bit factoring ceiling)'
    },
    'multipliers': {
        'default': ['0.5'],
        'type': list,
        'element_type': (str, int, float),
        'help': 'Bound multipliers'
    },
    'algorithms': {
        'required': True,
        'type': list,
        'element_type': str,
        'choices': get_algorithms(),
        'help': 'Algorithms to compare'
    },
    'trials': {
        'default': None,
        'type': int,
        'min': 1,
        'help': 'Trials per cell (bench.trials when unset)'
    },
    'formulas': {
        'default': {},
        'type': dict,
        'help': 'Per-algorithm bound formula'
    },
    'logy': {
        'default': False,
        'type': bool,
        'help': 'Log-scale y axis for the plot'
    },
    'x_axis': {
        'default': 'bits',
        'type': str,
        'choices': ['bits', 'multiplier'],
        'help': 'Plot x axis'
    }
}

# Presets used when the configuration file has no experiments section
DEFAULT_EXPERIMENTS: Dict[str, Dict[str, Any]] = {
    'table3': {
        'description': 'Mean solve time against the bound multiplier',
        'bits': [32, 36],
        'multipliers': ['0.1', '0.5', '1', '1.5', '2'],
        'algorithms': ['dic', 'dic-parallel', 'ic'],
        'x_axis': 'multiplier',
    },
    'comparison': {
        'description': 'All algorithms at multiplier 0.5',
        'bits': [20, 24, 28, 32],
        'multipliers': ['0.5'],
        'algorithms': get_algorithms(),
        'logy': True,
    },
    'minimum': {
        'description': 'Fine multiplier sweep around the optimum',
        'bits': [32],
        'multipliers': ['0.25', '0.3', '0.35', '0.4', '0.45', '0.5', '0.55', '0.6', '0.65', '0.7'],
        'algorithms': ['dic', 'ic'],
        'x_axis': 'multiplier',
    },
    'large-bits': {
        'description': 'Half-sqrt bound for index calculus, sqrt-half for double index calculus',
        'bits': [30, 36, 42],
        'multipliers': ['1'],
        'algorithms': ['dic', 'ic'],
        'formulas': {'ic': 'half-sqrt', 'dic': 'sqrt-half'},
        'logy': True,
    },
}
