"""Help templates and command documentation for dlogctl"""

from enum import Enum
from typing import Dict, Any, List


class CommandCategory(Enum):
    SOLVING = "SOLVING"
    EXPERIMENTS = "EXPERIMENTS & PLOTS"
    ANALYSIS = "ANALYSIS & DIAGNOSTICS"


class CommandHelpTemplates:
    @staticmethod
    def get_command_help() -> Dict[str, Dict[str, Any]]:
        return {
            'solve': {
                'category': CommandCategory.SOLVING,
                'syntax': 'solve --p <dec> --g <dec> --b <dec> [--algorithm dic|dic-parallel|ic|bsgs|rho|ph] '
                          '[--bound <int> | --bound-multiplier <rat>] [--bound-formula sqrt-half|half-sqrt] '
                          '[--parallel] [--seed <u64>] [--max-candidates <n>] [--max-rounds <n>] [--json]',
                'description': 'Solve one discrete logarithm g^x = b (mod p)',
                'parameters': '--p/--g/--b - decimal instance; --algorithm defaults to dic',
                'examples': [
                    'solve --p 1040483 --g 340003 --b 50064 --algorithm dic --bound 15 --seed 7',
                    'solve --p 11 --g 2 --b 9 --algorithm bsgs',
                    'solve --p 227 --g 17 --b 103 --algorithm ic --bound 15 --json'
                ],
                'details': [
                    'Prints x, or a JSON object with counters when --json is given',
                    'Without --bound the bound is multiplier * formula(p), multiplier 0.5 by default',
                    'Without --seed a random seed is drawn and logged to stderr',
                    'Exit code 1 when the solver fails or runs out of budget'
                ]
            },
            'sweep': {
                'category': CommandCategory.EXPERIMENTS,
                'syntax': 'sweep --bits <list|a-b> [--multipliers <list>] [--algorithms <list>] [--trials <n>] '
                          '[--seed <u64>] [--workers <n>] [--formula alg=formula] --out <path.csv>',
                'description': 'Run a timed grid of bits x multipliers x algorithms x trials',
                'parameters': '--bits accepts "20,24" or "20-28:4" within 12-80; lists are comma separated',
                'examples': [
                    'sweep --bits 20,24 --multipliers 0.5,1 --algorithms dic,ic --trials 5 --out sweep.csv',
                    'sweep --bits 30-42:6 --algorithms dic,ic --formula ic=half-sqrt --out large.csv'
                ],
                'details': [
                    'Records come out in grid order regardless of --workers',
                    'Failed trials are recorded with success=false, the sweep never aborts',
                    'Every algorithm of a trial sees the same instance'
                ]
            },
            'experiment': {
                'category': CommandCategory.EXPERIMENTS,
                'syntax': 'experiment <name> --out <csv> [--svg <svg>] [--trials <n>] [--seed <u64>] [--bits <list>]',
                'description': 'Run a sweep preset from the configuration file',
                'parameters': '<name> - preset name (table3, comparison, minimum, large-bits)',
                'examples': [
                    'experiment table3 --out table3.csv --svg table3.svg',
                    'experiment comparison --trials 5 --out cmp.csv'
                ],
                'details': [
                    'Presets live in the experiments section of the YAML configuration',
                    '--svg also writes the mean elapsed time chart'
                ]
            },
            'analyze': {
                'category': CommandCategory.ANALYSIS,
                'syntax': 'analyze (--prob <u>,<v> | --nice-cases <k> | --empirical <u>,<v> | --log-counts <k>,<i>,<j>)',
                'description': 'Evaluate closed-form quantities and their empirical counterparts',
                'parameters': '--bits, --trials and --seed tune --empirical',
                'examples': [
                    'analyze --prob 1,1          # prints 0.5',
                    'analyze --nice-cases 3      # prints 30',
                    'analyze --empirical 5,5 --bits 20 --trials 500'
                ],
                'details': [
                    '--prob prints the match probability lower bound as a decimal, the exact fraction is logged',
                    '--empirical runs both log tables until they reach sizes u and v and counts shared primes'
                ]
            },
            'plot': {
                'category': CommandCategory.EXPERIMENTS,
                'syntax': 'plot --in <csv> --out <svg> [--x bits|multiplier] [--y mean_elapsed] '
                          '[--series algorithm] [--logy] [--title <text>]',
                'description': 'Render an SVG line chart from a sweep CSV',
                'parameters': '--y accepts mean_<field> or success_rate',
                'examples': [
                    'plot --in sweep.csv --out sweep.svg --x multiplier --series algorithm',
                    'plot --in cmp.csv --out cmp.svg --logy'
                ],
                'details': [
                    'One polyline per distinct series value, mean over trials per x'
                ]
            },
            'selftest': {
                'category': CommandCategory.ANALYSIS,
                'syntax': 'selftest',
                'description': 'Run the worked-example regression checks',
                'parameters': 'None',
                'examples': [
                    'selftest'
                ],
                'details': [
                    'Prints PASS, FAIL or KNOWN per item',
                    'KNOWN marks documented mismatches in published exponent patterns and does not fail the run'
                ]
            }
        }

    @staticmethod
    def get_overview_help() -> str:
        return """Discrete logarithm toolkit: double index calculus, index calculus and generic baselines.
Results go to stdout, logs to stderr."""

    @staticmethod
    def get_command_syntax_help() -> List[str]:
        return [
            "Integers are decimal",
            "Rationals accept 0.5 or 1/2",
            "Exit codes: 0 success, 1 solve failure, 2 usage error",
            "Use '<command> --help' for detailed syntax and examples"
        ]

    @staticmethod
    def format_epilog(command: str) -> str:
        """Examples and details of one command, for argparse epilogs."""
        help_data = CommandHelpTemplates.get_command_help()[command]
        lines = [f"syntax: dlogctl {help_data['syntax']}", f"parameters: {help_data['parameters']}", "", "examples:"]
        lines.extend(f"  dlogctl {example}" for example in help_data['examples'])
        lines.append("")
        lines.append("notes:")
        lines.extend(f"  - {detail}" for detail in help_data['details'])
        return "\n".join(lines)

    @staticmethod
    def format_overview() -> str:
        lines = [CommandHelpTemplates.get_overview_help(), ""]
        by_category: Dict[CommandCategory, List[str]] = {}
        for name, data in CommandHelpTemplates.get_command_help().items():
            by_category.setdefault(data['category'], []).append(f"  {name:<11} {data['description']}")
        for category in CommandCategory:
            if category in by_category:
                lines.append(f"{category.value}:")
                lines.extend(by_category[category])
        lines.append("")
        lines.extend(CommandHelpTemplates.get_command_syntax_help())
        return "\n".join(lines)
