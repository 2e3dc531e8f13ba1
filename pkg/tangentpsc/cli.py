import argparse
from typing import Optional, Sequence

from tangentpsc.commands import (EXIT_INVALID_METRIC, EXIT_USAGE, build_run_config, run_command, write_output)
from tangentpsc.documents import NondegeneracyDocument, render
from tangentpsc.metrics import InvalidMetricError
from tangentpsc.utils.file_reading import DEFAULT_CONFIG_PATH, override_config
from tangentpsc.utils.logger_config import ConsoleColor, get_logger, setup_logger


def _common_arguments() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--config_path', type=str, default=str(DEFAULT_CONFIG_PATH),
                        help="The configuration diff file path.")
    parser.add_argument('--output_path', type=str, default=None, help="Output file, stdout when omitted.")
    parser.add_argument('--metric', type=str, default=None, help="Builtin metric: paper, cheeger-gromoll or sasaki.")
    parser.add_argument('--a', type=str, default=None, help="Expression for a(t), e.g. '1/100'.")
    parser.add_argument('--b', type=str, default=None, help="Expression for b(t), e.g. '1 + t'.")
    parser.add_argument('--scale', type=str, default=None, help="Global scale of the metric on TM.")
    parser.add_argument('--n', type=int, default=None, help="Dimension of the base space form.")
    parser.add_argument('--C', type=str, default=None, help="Sectional curvature of the base space form.")
    parser.add_argument('--precision', type=str, default=None, help="Width of certified enclosures.")
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(description="Exact scalar curvature of (a, b) metrics on tangent bundles "
                                                 "of space forms.")
    commands = parser.add_subparsers(dest='command', required=True)
    common = _common_arguments()

    profile = commands.add_parser('profile', parents=[common], help="Export the exact scalar curvature profile.")
    profile.add_argument('--format', choices=['json', 'csv'], default=None)
    profile.add_argument('--samples', type=str, default=None, help="Sampling range lo:hi:step for CSV output.")

    certify = commands.add_parser('certify', parents=[common], help="Certify uniform positivity of Sc.")
    certify.add_argument('--level', type=str, default=None,
                         help="Also check that the presented numerator exceeds this level.")

    dominate = commands.add_parser('dominate', parents=[common], help="Compare two metrics as quadratic forms.")
    dominate.add_argument('--lhs', type=str, default=None, help="Builtin name of the dominating metric.")
    dominate.add_argument('--rhs', type=str, default=None, help="Builtin name of the dominated metric.")
    dominate.add_argument('--lhs_scale', type=str, default=None)
    dominate.add_argument('--rhs_scale', type=str, default=None)

    oracle = commands.add_parser('oracle', parents=[common], help="Cross-validate against finite differences.")
    oracle.add_argument('--seed', type=int, default=None)
    oracle.add_argument('--tol', type=str, default=None, help="Relative tolerance.")
    oracle.add_argument('--step', type=str, default=None, help="Finite-difference step.")
    oracle.add_argument('--sample_count', type=int, default=None)
    oracle.add_argument('--num_workers', type=int, default=None)

    search = commands.add_parser('search', parents=[common], help="Rank a parameter family by certified C1.")
    search.add_argument('--grid', type=str, action='append', default=None,
                        help="Placeholder grid name=lo:hi:step, repeatable.")
    search.add_argument('--num_workers', type=int, default=None)

    commands.add_parser('displays', parents=[common], help="Check the worked hyperbolic example displays.")
    return parser.parse_args(argv)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    config = override_config(args.config_path)
    logging_config = config.get('logging', {})
    setup_logger(logging_config.get('log_file', ''), logging_config.get('level', 'INFO'))
    logger = get_logger()

    try:
        return run_command(build_run_config(args, config))
    except InvalidMetricError as e:
        logger.error(f"{ConsoleColor.RED}{e}{ConsoleColor.RESET}")
        write_output(render(NondegeneracyDocument.from_certificate(e.metric, e.certificate)), args.output_path)
        return EXIT_INVALID_METRIC
    except (ValueError, ZeroDivisionError) as e:
        # parse errors, unknown names, empty grids, chart and step preconditions
        logger.error(f"{ConsoleColor.RED}{type(e).__name__}: {e}{ConsoleColor.RESET}")
        return EXIT_USAGE
