"""
Support for complete sweep definitions.
"""

import itertools
import numbers
import typing

import numpy
from typing_extensions import Self

from .. import coin
from .. import etc
from .. import walk
from ._axes import SweepAxis
from ._exceptions import SweepValueError


FINAL_ONLY = 'final_only'
"""Record only the state after the last step of each walk."""

FULL_SERIES = 'full_series'
"""Record the state after every step of each walk."""

RECORD_MODES = (FINAL_ONLY, FULL_SERIES)


_COIN_FIELDS = {
    'alpha_a': ('a', 'alpha'),
    'beta_a': ('a', 'beta'),
    'gamma_a': ('a', 'gamma'),
    'alpha_b': ('b', 'alpha'),
    'beta_b': ('b', 'beta'),
    'gamma_b': ('b', 'gamma'),
    'alpha': ('ab', 'alpha'),
    'beta': ('ab', 'beta'),
    'gamma': ('ab', 'gamma'),
}


@etc.autostr
class SweepSpec:
    """A base quantum-walk configuration and the axes scanned around it.

    Each game sequence in `sequences` defines one panel. Every panel visits
    the same grid, which has one or two axes.
    """

    def __init__(
        self,
        sequences: typing.Iterable[str],
        coin_a: coin.CoinParams,
        coin_b: coin.CoinParams,
        phi: numbers.Real,
        initial: walk.InitialCoin,
        steps: int,
        axes: typing.Iterable[SweepAxis],
        record: str=FINAL_ONLY,
        name: typing.Optional[str]=None,
    ) -> None:
        self._sequences = _check_sequences(sequences)
        if not isinstance(steps, numbers.Integral) or steps < 1:
            raise SweepValueError(
                f"Number of steps must be a positive integer, got {steps!r}"
            ) from None
        self._axes = _check_axes(axes)
        if record not in RECORD_MODES:
            raise SweepValueError(
                f"Unknown record mode {record!r}; expected"
                f" {etc.join(RECORD_MODES, 'or', quoted=True)}"
            ) from None
        phi = float(phi)
        if not numpy.isfinite(phi):
            raise SweepValueError(f"phi must be finite, got {phi}") from None
        self._coin_a = coin_a
        self._coin_b = coin_b
        self._phi = phi
        self._initial = initial
        self._steps = int(steps)
        self._record = record
        self._name = name

    @property
    def sequences(self) -> typing.Tuple[str, ...]:
        """The game sequence of each panel."""
        return self._sequences

    @property
    def coin_a(self) -> coin.CoinParams:
        """Coin A before axis substitution."""
        return self._coin_a

    @property
    def coin_b(self) -> coin.CoinParams:
        """Coin B before axis substitution."""
        return self._coin_b

    @property
    def phi(self) -> float:
        """The origin phase before axis substitution."""
        return self._phi

    @property
    def initial(self) -> walk.InitialCoin:
        """The initial coin before axis substitution."""
        return self._initial

    @property
    def steps(self) -> int:
        """The number of steps in every walk."""
        return self._steps

    @property
    def axes(self) -> typing.Tuple[SweepAxis, ...]:
        """The one or two scanned axes."""
        return self._axes

    @property
    def record(self) -> str:
        """Either `FINAL_ONLY` or `FULL_SERIES`."""
        return self._record

    @property
    def name(self) -> typing.Optional[str]:
        """The preset name, if this spec came from a preset."""
        return self._name

    @property
    def shape(self) -> typing.Tuple[int, ...]:
        """The number of points along each axis."""
        return tuple(axis.points for axis in self._axes)

    @property
    def recorded_steps(self) -> int:
        """The number of recorded steps per grid point."""
        return self._steps if self._record == FULL_SERIES else 1

    def grid(self) -> typing.Iterator[typing.Tuple[int, ...]]:
        """Iterate over grid indices in row-major order."""
        return itertools.product(*(range(n) for n in self.shape))

    def values_at(self, index: typing.Sequence[int]) -> typing.Tuple[float, ...]:
        """The axis values at a grid index."""
        return tuple(axis.values[i] for axis, i in zip(self._axes, index))

    def point(
        self,
        panel: int,
        index: typing.Sequence[int],
    ) -> typing.Tuple[walk.GameSpec, walk.InitialCoin]:
        """The game and initial coin at one grid point of one panel."""
        values = dict(zip((a.name for a in self._axes), self.values_at(index)))
        changes = {'a': {}, 'b': {}}
        for axis_name, value in values.items():
            if axis_name in _COIN_FIELDS:
                which, angle = _COIN_FIELDS[axis_name]
                for label in which:
                    changes[label][angle] = value
        coin_a = (
            self._coin_a.replace(**changes['a']) if changes['a']
            else self._coin_a
        )
        coin_b = (
            self._coin_b.replace(**changes['b']) if changes['b']
            else self._coin_b
        )
        game = walk.GameSpec(
            coin_a,
            coin_b,
            self._sequences[panel],
            values.get('phi', self._phi),
        )
        initial = self._initial
        if 'theta' in values or 'varphi' in values:
            initial = walk.InitialCoin(
                values.get('theta', initial.theta),
                values.get('varphi', initial.varphi),
            )
        return game, initial

    def replace(self, **changes) -> Self:
        """Create a copy with some fields replaced."""
        current = {
            'sequences': self._sequences,
            'coin_a': self._coin_a,
            'coin_b': self._coin_b,
            'phi': self._phi,
            'initial': self._initial,
            'steps': self._steps,
            'axes': self._axes,
            'record': self._record,
            'name': self._name,
        }
        unknown = set(changes) - set(current)
        if unknown:
            raise SweepValueError(
                f"Unknown sweep field(s): {etc.join(sorted(unknown))}"
            ) from None
        current.update(changes)
        return type(self)(**current)

    def metadata(self) -> typing.List[typing.Tuple[str, str]]:
        """Key-value pairs that describe this spec in output files."""
        pairs = []
        if self._name is not None:
            pairs.append(('preset', self._name))
        pairs.extend(
            [
                ('sequences', ','.join(self._sequences)),
                ('coin_a', _coin_text(self._coin_a)),
                ('coin_b', _coin_text(self._coin_b)),
                ('phi', repr(self._phi)),
                ('theta', repr(self._initial.theta)),
                ('varphi', repr(self._initial.varphi)),
                ('steps', str(self._steps)),
                ('record', self._record),
            ]
        )
        for i, axis in enumerate(self._axes, start=1):
            pairs.append((f"axis{i}", axis.describe()))
        return pairs

    def __str__(self) -> str:
        """A simplified representation of this object."""
        axes = '; '.join(str(axis) for axis in self._axes)
        label = f"{self._name}: " if self._name else ''
        return (
            f"{label}sequences={','.join(self._sequences)},"
            f" steps={self._steps}, record={self._record}, axes=[{axes}]"
        )


def _coin_text(params: coin.CoinParams) -> str:
    return params.source


def _check_sequences(sequences: typing.Iterable[str]) -> typing.Tuple[str, ...]:
    if isinstance(sequences, str):
        sequences = [sequences]
    checked = []
    for sequence in sequences:
        try:
            checked.append(walk.validate_sequence(sequence))
        except walk.WalkValueError as err:
            raise SweepValueError(str(err)) from None
    if not checked:
        raise SweepValueError("A sweep needs at least one sequence") from None
    return tuple(checked)


def _check_axes(
    axes: typing.Iterable[SweepAxis],
) -> typing.Tuple[SweepAxis, ...]:
    checked = tuple(axes)
    if not 1 <= len(checked) <= 2:
        raise SweepValueError(
            f"A sweep needs one or two axes, got {len(checked)}"
        ) from None
    for axis in checked:
        if not isinstance(axis, SweepAxis):
            raise SweepValueError(
                f"Expected a sweep axis, got {type(axis)}"
            ) from None
    names = [axis.name for axis in checked]
    if len(set(names)) != len(names):
        raise SweepValueError(
            f"Axis names must be distinct, got {names}"
        ) from None
    targets = set()
    for name in names:
        if name in _COIN_FIELDS:
            which, angle = _COIN_FIELDS[name]
            touched = {(label, angle) for label in which}
        else:
            touched = {(name,)}
        if touched & targets:
            raise SweepValueError(
                f"Axes {etc.join(names, quoted=True)} set the same parameter"
            ) from None
        targets |= touched
    return checked
