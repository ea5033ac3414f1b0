"""
Support for the package-wide command-line interface (CLI).
"""

import os
import shlex
import sys
import typing
from importlib.metadata import version

import numpy

from . import classical
from . import coin
from . import config
from . import datafile
from . import etc
from . import observables
from . import paths
from . import sweep
from . import walk


THREADS_VARIABLE = 'PARRONDO_QWALK_THREADS'
"""Environment variable that supplies a default worker count."""

SWITCHES = frozenset({'verbose', 'analytic'})
"""Configuration keys that name on/off flags rather than valued options."""

_TRUE = {'true', 'yes', 'on', '1'}
_FALSE = {'false', 'no', 'off', '0'}


class UserError(Exception):
    """Incorrect use of a function (probably from the CLI)."""


class CLIError(Exception):
    """Invalid data generated by the CLI."""


def run(mode: str, options: typing.Mapping):
    if mode == 'run':
        return run_walk_subparser(options)
    if mode == 'sweep':
        return run_sweep_subparser(options)
    if mode == 'classical':
        return run_classical_subparser(options)
    if mode == 'report':
        return run_report_subparser(options)
    raise CLIError(f"Unknown mode: {mode!r}")


def status(message: str, verbose: bool) -> None:
    """Print a progress message to standard error if `verbose` is true."""
    if verbose:
        print(message, file=sys.stderr)


def package_version() -> str:
    """The installed version of this package."""
    return version(__package__)


def merge_config(argv: typing.Sequence[str]) -> typing.List[str]:
    """Replace ``--config FILE`` with the flags that FILE defines.

    File flags go directly after the subcommand name, so flags given on the
    command line take precedence. If the command line gives any ``--axis``,
    the file's axis entries are dropped.
    """
    args = list(argv)
    if '--config' in args:
        i = args.index('--config')
        if i + 1 >= len(args):
            raise UserError("--config needs a file name") from None
        filename = args[i + 1]
        del args[i:i+2]
    else:
        matches = [a for a in args if a.startswith('--config=')]
        if not matches:
            return args
        filename = matches[0].split('=', 1)[1]
        args.remove(matches[0])
    if not args or args[0].startswith('-'):
        raise UserError("--config must follow a subcommand") from None
    cfg = config.configfile(filename)
    keep_axes = '--axis' not in args
    flags = []
    for key, value in cfg.pairs:
        if key == 'config':
            raise config.ConfigKeyError(
                f"{cfg.source} may not contain a 'config' key"
            ) from None
        if key == 'axis' and not keep_axes:
            continue
        if key in SWITCHES:
            flags.extend(_switch(key, value, cfg.source))
        else:
            flags.extend([f"--{key}", value])
    return [args[0], *flags, *args[1:]]


def _switch(
    key: str,
    value: str,
    source: paths.PathLike,
) -> typing.List[str]:
    """Translate a boolean configuration entry into zero or one flags."""
    lowered = value.lower()
    if lowered in _TRUE:
        return [f"--{key}"]
    if lowered in _FALSE:
        return []
    raise config.ConfigSyntaxError(
        f"{source}: {key!r} must be true or false, got {value!r}"
    ) from None


def resolve_threads(requested: typing.Optional[int]) -> int:
    """Apply the environment fallback to a requested worker count."""
    if requested is not None:
        value = requested
    else:
        text = os.environ.get(THREADS_VARIABLE)
        if text is None:
            return 1
        try:
            value = int(text)
        except ValueError:
            raise UserError(
                f"{THREADS_VARIABLE} must be an integer, got {text!r}"
            ) from None
    if value < 0:
        raise UserError(
            f"The worker count must be nonnegative, got {value}"
        ) from None
    return sweep.resolve_threads(value)


def _require(options: typing.Mapping, names: typing.Iterable[str]) -> None:
    """Raise `UserError` naming the first missing flag."""
    for name in names:
        if options.get(name) is None:
            flag = '--' + name.replace('_', '-')
            raise UserError(f"the following argument is required: {flag}")


def _command(mode: str, flags: typing.Iterable[typing.Tuple[str, typing.Any]]):
    """The canonical re-invocation of a command, without output paths."""
    words = [mode]
    for flag, value in flags:
        if value is None or value is False:
            continue
        words.append(flag)
        if value is not True:
            words.append(str(value))
    return shlex.join(words)


def run_walk_subparser(options: typing.Mapping):
    """Evolve one quantum walk and write its observables.

    The output table has one row per step with the expected position, the
    right-minus-left probability difference, and the coin entanglement entropy.
    The initial coin defaults to (θ, varphi) = (π/4, 3π/2), the balanced state
    (|0⟩ − i|1⟩)/√2.
    """
    coin_a = coin.parse_coin(options['coin_a'])
    coin_b = coin.parse_coin(options['coin_b'])
    phi = coin.parse_angle(options['phi'])
    standard = walk.InitialCoin.standard()
    theta_text = options.get('theta') or repr(standard.theta)
    varphi_text = options.get('varphi') or repr(standard.varphi)
    initial = walk.InitialCoin(
        coin.parse_angle(theta_text),
        coin.parse_angle(varphi_text),
    )
    game = walk.GameSpec(coin_a, coin_b, options['sequence'], phi)
    steps = options['steps']
    fmt = options.get('format') or 'csv'
    recorder = observables.SeriesRecorder()
    walk.evolve(game, initial, steps, observer=recorder)
    series = recorder.series
    command = _command(
        'run',
        [
            ('--sequence', game.sequence),
            ('--coin-a', coin_a.source),
            ('--coin-b', coin_b.source),
            ('--phi', options['phi']),
            ('--theta', theta_text),
            ('--varphi', varphi_text),
            ('--steps', steps),
            ('--format', fmt),
        ],
    )
    metadata = [
        ('command', command),
        ('version', package_version()),
        ('sequence', game.sequence),
        ('coin_a', coin_a.source),
        ('coin_b', coin_b.source),
        ('phi', options['phi']),
        ('theta', theta_text),
        ('varphi', varphi_text),
        ('steps', str(steps)),
    ]
    write = datafile.write_json if fmt == 'json' else datafile.write_csv
    count = write(
        options['out'],
        observables.Observation._fields,
        series.rows(),
        metadata=metadata,
    )
    status(f"Wrote {count} rows to {options['out']}", options.get('verbose'))


def parse_axis(text: str) -> sweep.SweepAxis:
    """Create a sweep axis from ``NAME:START:STOP:POINTS`` or ``NAME:V1,V2``.

    Angles accept the same degree suffix as coin angles.
    """
    name, sep, rest = str(text).partition(':')
    if not sep or not rest:
        raise UserError(
            f"An axis looks like NAME:START:STOP:POINTS or NAME:V1,V2,...;"
            f" got {text!r}"
        ) from None
    parts = rest.split(':')
    if len(parts) == 1:
        return sweep.SweepAxis.explicit(
            name.strip(),
            [coin.parse_angle(v) for v in parts[0].split(',')],
        )
    if len(parts) != 3:
        raise UserError(
            f"A uniform axis needs START:STOP:POINTS, got {rest!r}"
        ) from None
    try:
        points = int(parts[2])
    except ValueError:
        raise UserError(
            f"Axis point count must be an integer, got {parts[2]!r}"
        ) from None
    return sweep.SweepAxis(
        name.strip(),
        coin.parse_angle(parts[0]),
        coin.parse_angle(parts[1]),
        points,
    )


_CUSTOM_SWEEP = (
    'sequences',
    'coin_a',
    'coin_b',
    'phi',
    'steps',
    'axis',
)


def run_sweep_subparser(options: typing.Mapping):
    """Scan one or two parameters and tabulate the walk observables.

    Either name a preset, which fixes every physics parameter, or give the
    sequences, both coins, the origin phase, the step count, and one or two
    axes explicitly. Each axis is NAME:START:STOP:POINTS for a uniform grid
    with inclusive endpoints, or NAME:V1,V2,... for explicit values.
    """
    if options.get('preset'):
        given = [
            '--' + name.replace('_', '-')
            for name in (*_CUSTOM_SWEEP, 'theta', 'varphi', 'record')
            if options.get(name)
        ]
        if given:
            raise UserError(
                f"--preset fixes every physics parameter; remove"
                f" {etc.join(given)}"
            ) from None
        spec = sweep.preset(options['preset'])
        command = _command('sweep', [('--preset', spec.name)])
    else:
        _require(options, _CUSTOM_SWEEP)
        spec, command = _custom_sweep(options)
    threads = resolve_threads(options.get('threads'))
    verbose = options.get('verbose')
    status(f"Running {spec} with {threads} worker(s)", verbose)
    result = sweep.run_sweep(spec, threads=threads)
    metadata = [('command', command), ('version', package_version())]
    count = sweep.write_csv(result, options['out'], metadata=metadata)
    status(f"Wrote {count} rows to {options['out']}", verbose)
    if options.get('svg'):
        sweep.write_svg(result, options['svg'])
        status(f"Wrote figure to {options['svg']}", verbose)


def _custom_sweep(options: typing.Mapping):
    """Build a sweep spec and its canonical command from explicit flags."""
    sequences = [s.strip() for s in options['sequences'].split(',')]
    coin_a = coin.parse_coin(options['coin_a'])
    coin_b = coin.parse_coin(options['coin_b'])
    standard = walk.InitialCoin.standard()
    theta_text = options.get('theta') or repr(standard.theta)
    varphi_text = options.get('varphi') or repr(standard.varphi)
    axes_text = list(options['axis'])
    record = options.get('record') or sweep.FINAL_ONLY
    spec = sweep.SweepSpec(
        sequences=sequences,
        coin_a=coin_a,
        coin_b=coin_b,
        phi=coin.parse_angle(options['phi']),
        initial=walk.InitialCoin(
            coin.parse_angle(theta_text),
            coin.parse_angle(varphi_text),
        ),
        steps=options['steps'],
        axes=[parse_axis(text) for text in axes_text],
        record=record,
    )
    flags = [
        ('--sequences', ','.join(spec.sequences)),
        ('--coin-a', coin_a.source),
        ('--coin-b', coin_b.source),
        ('--phi', options['phi']),
        ('--theta', theta_text),
        ('--varphi', varphi_text),
        ('--steps', spec.steps),
        *(('--axis', text) for text in axes_text),
        ('--record', record),
    ]
    return spec, _command('sweep', flags)


_MONTE_CARLO = ('sequence', 'steps', 'trials', 'seed', 'out')


def run_classical_subparser(options: typing.Mapping):
    """Analyze or simulate the classical capital-dependent games.

    With --analytic, print the game-B transition matrix, its stationary
    distribution, the per-state expected gains, and the expected gain per play
    of each game. Otherwise, run a seeded Monte Carlo simulation of a game
    sequence and write the mean capital after each play.
    """
    params = classical.ClassicalParams(options['c'])
    if options.get('analytic'):
        return print_classical_analysis(params)
    _require(options, _MONTE_CARLO)
    trajectory = classical.simulate_classical(
        options['sequence'],
        params,
        steps=options['steps'],
        trials=options['trials'],
        seed=options['seed'],
    )
    burn_in = options.get('burn_in') or 0
    gain = classical.slope(trajectory, burn_in=burn_in)
    command = _command(
        'classical',
        [
            ('--c', options['c']),
            ('--sequence', trajectory.sequence),
            ('--steps', options['steps']),
            ('--trials', trajectory.trials),
            ('--seed', trajectory.seed),
            ('--burn-in', burn_in),
        ],
    )
    metadata = [
        ('command', command),
        ('version', package_version()),
        ('sequence', trajectory.sequence),
        ('c', repr(params.c)),
        ('p_a', repr(params.p_a)),
        ('p_b1', repr(params.p_b1)),
        ('p_b2', repr(params.p_b2)),
        ('trials', str(trajectory.trials)),
        ('seed', str(trajectory.seed)),
        ('extension', str(trajectory.extension)),
        ('slope', repr(gain.value)),
        ('slope_stderr', repr(gain.stderr)),
    ]
    rows = zip(trajectory.steps, trajectory.mean_capital, trajectory.stderr)
    count = datafile.write_csv(
        options['out'],
        ('step', 'mean_capital', 'stderr'),
        rows,
        metadata=metadata,
    )
    status(f"Wrote {count} rows to {options['out']}", options.get('verbose'))


def print_classical_analysis(params: classical.ClassicalParams) -> None:
    """Print the closed-form analysis of the classical games."""
    T = classical.transition_matrix(params)
    d = classical.stationary_distribution(T)
    w = classical.expected_winnings(params)
    with numpy.printoptions(precision=12, suppress=True):
        print(f"c = {params.c!r}")
        print("transition matrix T =")
        print(T)
        print(f"stationary distribution d = {d}")
        print(f"expected gains w = {w}")
    value = classical.game_a_expected_value(params)
    print(f"game A expected value = {value!r}")
    print(f"game B expected value d.w = {float(numpy.dot(d, w))!r}")


def run_report_subparser(options: typing.Mapping):
    """Regenerate the table and figure of every preset sweep.

    Each preset NAME produces NAME.csv and NAME.svg in the output directory,
    which this command creates if necessary.
    """
    directory = paths.fullpath(options['out_dir'])
    directory.mkdir(parents=True, exist_ok=True)
    names = options.get('presets') or list(sweep.PRESETS)
    threads = resolve_threads(options.get('threads'))
    verbose = options.get('verbose')
    specs = [sweep.preset(name) for name in names]
    for spec in specs:
        status(f"Running {spec.name} with {threads} worker(s)", verbose)
        result = sweep.run_sweep(spec, threads=threads)
        metadata = [
            ('command', _command('sweep', [('--preset', spec.name)])),
            ('version', package_version()),
        ]
        csvpath = paths.output_path(directory / spec.name, '.csv')
        svgpath = paths.output_path(directory / spec.name, '.svg')
        sweep.write_csv(result, csvpath, metadata=metadata)
        sweep.write_svg(result, svgpath)
        status(f"Wrote {csvpath} and {svgpath}", verbose)


_docstring_replacements = {
    '`': "'",
}

DESCRIPTIONS = {
    'run': etc.doc2help(
        run_walk_subparser,
        mode='full',
        replacements=_docstring_replacements,
    ),
    'sweep': etc.doc2help(
        run_sweep_subparser,
        mode='full',
        replacements=_docstring_replacements,
    ),
    'classical': etc.doc2help(
        run_classical_subparser,
        mode='full',
        replacements=_docstring_replacements,
    ),
    'report': etc.doc2help(
        run_report_subparser,
        mode='full',
        replacements=_docstring_replacements,
    ),
}
