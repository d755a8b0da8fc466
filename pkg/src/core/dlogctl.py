"""dlogctl: command-line front end.

    python src/core/dlogctl.py solve --p 11 --g 2 --b 9 --algorithm bsgs
"""
import argparse
import contextlib
import logging
import os
import sys
from typing import List, Optional, TextIO, Tuple

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from config import ConfigError, ConfigManager
from core.commands import EXIT_OK, EXIT_USAGE, DlogCommands
from templates.help_templates import CommandHelpTemplates


def _int_list(text: str) -> List[int]:
    """``20,24`` or ``20-28`` or ``20-28:4``."""
    values: List[int] = []
    try:
        for part in text.split(','):
            part = part.strip()
            if '-' in part:
                span, _, step = part.partition(':')
                low, high = (int(x) for x in span.split('-', 1))
                values.extend(range(low, high + 1, int(step) if step else 1))
            else:
                values.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer list {text!r}")
    if not values:
        raise argparse.ArgumentTypeError(f"empty integer list {text!r}")
    return values


def _str_list(text: str) -> List[str]:
    values = [part.strip() for part in text.split(',') if part.strip()]
    if not values:
        raise argparse.ArgumentTypeError(f"empty list {text!r}")
    return values


def _int_tuple(size: int):
    def parse(text: str) -> Tuple[int, ...]:
        try:
            values = tuple(int(part) for part in text.split(','))
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected {size} comma-separated integers, got {text!r}")
        if len(values) != size:
            raise argparse.ArgumentTypeError(f"expected {size} comma-separated integers, got {text!r}")
        return values
    return parse


def _formula_pair(text: str) -> Tuple[str, str]:
    algorithm, sep, formula = text.partition('=')
    if not sep or not algorithm or not formula:
        raise argparse.ArgumentTypeError(f"expected alg=formula, got {text!r}")
    return algorithm.strip(), formula.strip()


def _u64(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}")
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 bits, got {text!r}")
    return value


def _subparser(subparsers, name: str) -> argparse.ArgumentParser:
    help_data = CommandHelpTemplates.get_command_help()[name]
    return subparsers.add_parser(
        name,
        help=help_data['description'],
        description=help_data['description'],
        epilog=CommandHelpTemplates.format_epilog(name),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='dlogctl',
        description=CommandHelpTemplates.format_overview(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument('-c', '--config', type=str, default=None,
                        help='Path to the configuration file (default: config_file/dlogkit.yaml)')
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true', help='Log at DEBUG level')
    verbosity.add_argument('-q', '--quiet', action='store_true', help='Log warnings and errors only')
    subparsers = parser.add_subparsers(dest='command', metavar='<command>')

    solve = _subparser(subparsers, 'solve')
    solve.add_argument('--p', type=int, required=True, help='Prime modulus')
    solve.add_argument('--g', type=int, required=True, help='Base')
    solve.add_argument('--b', type=int, required=True, help='Target')
    solve.add_argument('--algorithm', choices=['dic', 'dic-parallel', 'ic', 'bsgs', 'rho', 'ph'], default=None)
    bound = solve.add_mutually_exclusive_group()
    bound.add_argument('--bound', type=int, default=None, help='Explicit smoothness bound')
    bound.add_argument('--bound-multiplier', type=str, default=None, help='Multiplier of the bound formula')
    solve.add_argument('--bound-formula', choices=['sqrt-half', 'half-sqrt'], default=None)
    solve.add_argument('--parallel', action='store_true', help='Run the two pipelines concurrently (dic)')
    solve.add_argument('--seed', type=_u64, default=None)
    solve.add_argument('--max-candidates', type=int, default=None)
    solve.add_argument('--max-rounds', type=int, default=None)
    solve.add_argument('--json', action='store_true', help='Print a JSON object with counters')

    sweep = _subparser(subparsers, 'sweep')
    sweep.add_argument('--bits', type=_int_list, required=True)
    sweep.add_argument('--multipliers', type=_str_list, default=['0.5'])
    sweep.add_argument('--algorithms', type=_str_list, default=['dic', 'ic'])
    sweep.add_argument('--trials', type=int, default=None)
    sweep.add_argument('--seed', type=_u64, default=None)
    sweep.add_argument('--workers', type=int, default=None)
    sweep.add_argument('--formula', type=_formula_pair, action='append', default=[],
                       help='Per-algorithm bound formula, repeatable')
    sweep.add_argument('--max-candidates', type=int, default=None)
    sweep.add_argument('--max-rounds', type=int, default=None)
    sweep.add_argument('--out', required=True, help='CSV output path')
    sweep.add_argument('--svg', default=None, help='Optional SVG plot path')

    experiment = _subparser(subparsers, 'experiment')
    experiment.add_argument('name')
    experiment.add_argument('--out', required=True)
    experiment.add_argument('--svg', default=None)
    experiment.add_argument('--trials', type=int, default=None)
    experiment.add_argument('--seed', type=_u64, default=None)
    experiment.add_argument('--bits', type=_int_list, default=None)
    experiment.add_argument('--workers', type=int, default=None)

    analyze = _subparser(subparsers, 'analyze')
    quantity = analyze.add_mutually_exclusive_group(required=True)
    quantity.add_argument('--prob', type=_int_tuple(2), metavar='U,V')
    quantity.add_argument('--nice-cases', type=int, metavar='K')
    quantity.add_argument('--empirical', type=_int_tuple(2), metavar='U,V')
    quantity.add_argument('--log-counts', type=_int_tuple(3), metavar='K,I,J')
    analyze.add_argument('--bits', type=int, default=20)
    analyze.add_argument('--trials', type=int, default=500)
    analyze.add_argument('--seed', type=_u64, default=None)

    plot = _subparser(subparsers, 'plot')
    plot.add_argument('--in', dest='source', required=True)
    plot.add_argument('--out', required=True)
    plot.add_argument('--x', dest='x_axis', default='bits')
    plot.add_argument('--y', dest='y_axis', default='mean_elapsed')
    plot.add_argument('--series', default='algorithm')
    plot.add_argument('--logy', action='store_true')
    plot.add_argument('--title', default=None)

    _subparser(subparsers, 'selftest')
    return parser


def setup_logging(logging_config: dict, verbose: bool, quiet: bool, stream: TextIO) -> None:
    level = logging_config.get('level', 'INFO')
    if verbose:
        level = 'DEBUG'
    elif quiet:
        level = 'WARNING'
    handlers: List[logging.Handler] = [logging.StreamHandler(stream)]
    if logging_config.get('file'):
        handlers.append(logging.FileHandler(logging_config['file']))
    logging.basicConfig(
        level=getattr(logging, level),
        format=logging_config.get('format', '%(asctime)s - %(message)s'),
        datefmt=logging_config.get('datefmt', '%Y-%m-%d %H:%M:%S'),
        handlers=handlers,
        force=True,
    )


def run_command(commands: DlogCommands, args: argparse.Namespace, bench_seed: int) -> dict:
    if args.command == 'solve':
        return commands.solve(
            args.p, args.g, args.b, algorithm=args.algorithm, bound=args.bound,
            bound_multiplier=args.bound_multiplier, bound_formula=args.bound_formula,
            parallel=args.parallel, seed=args.seed, max_candidates=args.max_candidates,
            max_rounds=args.max_rounds, as_json=args.json,
        )
    if args.command == 'sweep':
        return commands.sweep(
            args.bits, args.multipliers, args.algorithms, args.out, trials=args.trials,
            seed=args.seed, workers=args.workers, formulas=dict(args.formula),
            max_candidates=args.max_candidates, max_rounds=args.max_rounds, svg=args.svg,
        )
    if args.command == 'experiment':
        return commands.experiment(args.name, args.out, svg=args.svg, trials=args.trials,
                                   seed=args.seed, bits=args.bits, workers=args.workers)
    if args.command == 'analyze':
        if args.prob is not None:
            return commands.analyze_probability(*args.prob)
        if args.nice_cases is not None:
            return commands.analyze_nice_cases(args.nice_cases)
        if args.log_counts is not None:
            return commands.analyze_log_counts(*args.log_counts)
        seed = args.seed if args.seed is not None else bench_seed
        return commands.analyze_empirical(*args.empirical, bits=args.bits, trials=args.trials, seed=seed)
    if args.command == 'plot':
        return commands.plot(args.source, args.out, x_axis=args.x_axis, y_axis=args.y_axis,
                             series=args.series, logy=args.logy, title=args.title)
    return commands.selftest()


def dispatch(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None,
             stderr: Optional[TextIO] = None) -> int:
    """Run one dlogctl invocation and return its exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        # argparse prints usage, errors and --help to sys.stdout/sys.stderr
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if args.command is None:
        parser.print_usage(stderr)
        return EXIT_USAGE

    try:
        config_manager = ConfigManager(args.config)
    except ConfigError as e:
        print(f"dlogctl: configuration error: {e}", file=stderr)
        for detail in e.details:
            print(f"  - {detail}", file=stderr)
        return EXIT_USAGE

    setup_logging(config_manager.get_logging_config(), args.verbose, args.quiet, stderr)
    commands = DlogCommands(config_manager)
    response = run_command(commands, args, config_manager.get_bench_config()['seed'])

    for note in response['notes']:
        print(note, file=stderr)
    for line in response['output']:
        print(line, file=stdout)
    if response['status'] != 'success':
        print(f"dlogctl {args.command}: {response['message']}", file=stderr)
    return response['exit_code']


def main():
    sys.exit(dispatch())


if __name__ == '__main__':
    main()
