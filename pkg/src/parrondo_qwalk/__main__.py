import argparse
import sys
import typing

from . import cli
from . import config
from . import paths
from . import sweep


EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

PROG = 'parrondo_qwalk'


def print_version():
    print(f"{PROG} {cli.package_version()}")


def _add_common(parser: argparse.ArgumentParser) -> None:
    """Add the flags that every subcommand accepts."""
    parser.add_argument(
        '--config',
        help=(
            "read key=value flags from FILE"
            "; flags on the command line take precedence"
        ),
        metavar='FILE',
    )
    parser.add_argument(
        '-v', '--verbose',
        help="print status messages to standard error",
        action='store_true',
    )


def _add_threads(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '--threads',
        help=(
            "use N worker processes (0 = all CPUs)"
            f"; defaults to ${cli.THREADS_VARIABLE}, then 1"
        ),
        type=int,
        metavar='N',
    )


def _add_walk(parser: argparse.ArgumentParser, required: bool) -> None:
    """Add the physics flags shared by `run` and custom sweeps."""
    parser.add_argument(
        '--coin-a',
        help="angles ALPHA,BETA,GAMMA of coin A (radians; 'd' suffix = degrees)",
        required=required,
        metavar='ANGLES',
    )
    parser.add_argument(
        '--coin-b',
        help="angles ALPHA,BETA,GAMMA of coin B",
        required=required,
        metavar='ANGLES',
    )
    parser.add_argument(
        '--phi',
        help="phase applied to the coin at the origin",
        required=required,
        metavar='ANGLE',
    )
    parser.add_argument(
        '--theta',
        help="initial coin mixing angle in [0, π] (default: π/4)",
        metavar='ANGLE',
    )
    parser.add_argument(
        '--varphi',
        help="initial coin relative phase in [0, 2π] (default: 3π/2)",
        metavar='ANGLE',
    )
    parser.add_argument(
        '--steps',
        help="number of walk steps",
        type=int,
        required=required,
        metavar='N',
    )


def build_parser() -> argparse.ArgumentParser:
    """Create the command-line parser."""
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Quantum-walk Parrondo games and their classical baseline",
        formatter_class=argparse.RawTextHelpFormatter,
    )
    parser.add_argument(
        '-V', '--version',
        help="print the current package version",
        action='store_true',
    )
    subparsers = parser.add_subparsers(
        title="modes",
        dest="mode",
    )

    run_parser = subparsers.add_parser(
        'run',
        description=cli.DESCRIPTIONS['run'],
        formatter_class=argparse.RawDescriptionHelpFormatter,
        help="evolve one walk and write its observables",
    )
    run_parser.add_argument(
        '--sequence',
        help="repeating game pattern over A and B, such as ABB",
        required=True,
    )
    _add_walk(run_parser, required=True)
    run_parser.add_argument(
        '--out',
        help="write the observables to FILE",
        required=True,
        metavar='FILE',
    )
    run_parser.add_argument(
        '--format',
        help="output format (default: csv)",
        choices=('csv', 'json'),
    )
    _add_common(run_parser)

    sweep_parser = subparsers.add_parser(
        'sweep',
        description=cli.DESCRIPTIONS['sweep'],
        epilog=f"presets:\n{sweep.describe_presets()}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        help="scan parameters and tabulate the observables",
    )
    sweep_parser.add_argument(
        '--preset',
        help=f"run a named sweep ({', '.join(sweep.PRESETS)})",
        metavar='NAME',
    )
    sweep_parser.add_argument(
        '--sequences',
        help="comma-separated game patterns, one panel each",
    )
    _add_walk(sweep_parser, required=False)
    sweep_parser.add_argument(
        '--axis',
        help="NAME:START:STOP:POINTS or NAME:V1,V2,... (give once or twice)",
        action='append',
        metavar='AXIS',
    )
    sweep_parser.add_argument(
        '--record',
        help="record only the final step or every step (default: final_only)",
        choices=sweep.RECORD_MODES,
    )
    sweep_parser.add_argument(
        '--out',
        help="write the table to FILE",
        required=True,
        metavar='FILE',
    )
    sweep_parser.add_argument(
        '--svg',
        help="also draw a figure to FILE",
        metavar='FILE',
    )
    _add_threads(sweep_parser)
    _add_common(sweep_parser)

    classical_parser = subparsers.add_parser(
        'classical',
        description=cli.DESCRIPTIONS['classical'],
        formatter_class=argparse.RawDescriptionHelpFormatter,
        help="analyze or simulate the classical games",
    )
    classical_parser.add_argument(
        '--c',
        help="bias subtracted from every win probability, 0 <= C < 0.1",
        required=True,
        metavar='C',
    )
    classical_parser.add_argument(
        '--analytic',
        help="print the closed-form analysis instead of simulating",
        action='store_true',
    )
    classical_parser.add_argument(
        '--sequence',
        help="(simulation) repeating game pattern over A and B",
    )
    classical_parser.add_argument(
        '--steps',
        help="(simulation) number of plays per trial",
        type=int,
        metavar='N',
    )
    classical_parser.add_argument(
        '--trials',
        help="(simulation) number of independent trials",
        type=int,
        metavar='N',
    )
    classical_parser.add_argument(
        '--seed',
        help="(simulation) nonnegative random seed",
        type=int,
    )
    classical_parser.add_argument(
        '--burn-in',
        help="(simulation) plays to skip when estimating the slope",
        type=int,
        metavar='N',
    )
    classical_parser.add_argument(
        '--out',
        help="(simulation) write the mean capital to FILE",
        metavar='FILE',
    )
    _add_common(classical_parser)

    report_parser = subparsers.add_parser(
        'report',
        description=cli.DESCRIPTIONS['report'],
        formatter_class=argparse.RawDescriptionHelpFormatter,
        help="regenerate every preset table and figure",
    )
    report_parser.add_argument(
        '--out-dir',
        help="write files to DIR",
        required=True,
        metavar='DIR',
    )
    report_parser.add_argument(
        '--presets',
        help="run only these presets",
        nargs='+',
        choices=tuple(sweep.PRESETS),
        metavar='NAME',
    )
    _add_threads(report_parser)
    _add_common(report_parser)
    return parser


_USAGE_ERRORS = (
    cli.UserError,
    config.ConfigKeyError,
    ValueError,
)

_RUNTIME_ERRORS = (
    OSError,
    paths.NonExistentPathError,
    RuntimeError,
    ArithmeticError,
)


def _fail(message: typing.Any, mode: typing.Optional[str], code: int) -> int:
    print(f"{PROG}: error: {message}", file=sys.stderr)
    if code == EXIT_USAGE and mode:
        print(f"Try '{PROG} {mode} --help'", file=sys.stderr)
    return code


def main(argv: typing.Optional[typing.Sequence[str]]=None) -> int:
    """Parse arguments, run the requested mode, and return an exit status."""
    parser = build_parser()
    args = list(sys.argv[1:] if argv is None else argv)
    mode = args[0] if args and not args[0].startswith('-') else None
    try:
        args = cli.merge_config(args)
    except _USAGE_ERRORS as err:
        return _fail(err, mode, EXIT_USAGE)
    except _RUNTIME_ERRORS as err:
        return _fail(err, mode, EXIT_FAILURE)
    options = vars(parser.parse_args(args))
    options.pop('config', None)
    if options.pop('version', None):
        print_version()
        return EXIT_SUCCESS
    usermode = options.pop('mode')
    if not usermode:
        parser.error(f"No arguments. Try '{PROG} --help'")
    try:
        cli.run(usermode, options)
    except _USAGE_ERRORS as err:
        return _fail(err, usermode, EXIT_USAGE)
    except _RUNTIME_ERRORS as err:
        return _fail(err, usermode, EXIT_FAILURE)
    return EXIT_SUCCESS


if __name__ == '__main__':
    sys.exit(main())
