"""
Support for the scanned dimensions of a parameter sweep.
"""

import numbers
import typing

import numpy
from typing_extensions import Self

from .. import coin
from .. import etc
from ._exceptions import SweepValueError


AXIS_NAMES = (
    'phi',
    'theta',
    'varphi',
    'alpha_a',
    'beta_a',
    'gamma_a',
    'alpha_b',
    'beta_b',
    'gamma_b',
    'alpha',
    'beta',
    'gamma',
)
"""The parameters that a sweep axis may scan.

The names `alpha`, `beta`, and `gamma` set the angle on both coins.
"""


def grid_value(start: float, stop: float, points: int, i: int) -> float:
    """The `i`-th point of an inclusive uniform grid.

    The last point is `stop` itself, so a grid never overshoots a closed range
    such as θ ∈ [0, π].
    """
    if i == points - 1:
        return stop
    return start + i * (stop - start) / (points - 1)


@etc.autostr
class SweepAxis:
    """A named parameter and the values it takes during a sweep."""

    def __init__(
        self,
        name: str,
        start: numbers.Real,
        stop: numbers.Real,
        points: int,
    ) -> None:
        self._name = _check_name(name)
        start = _finite(start, 'start')
        stop = _finite(stop, 'stop')
        if not start < stop:
            raise SweepValueError(
                f"Axis {name!r} must have start < stop, got {start}, {stop}"
            ) from None
        if not isinstance(points, numbers.Integral) or points < 2:
            raise SweepValueError(
                f"Axis {name!r} needs at least 2 points, got {points!r}"
            ) from None
        self._start = start
        self._stop = stop
        self._points = int(points)
        self._explicit = False
        self._values = tuple(
            grid_value(start, stop, self._points, i)
            for i in range(self._points)
        )

    @classmethod
    def explicit(
        cls,
        name: str,
        values: typing.Iterable[numbers.Real],
    ) -> Self:
        """Create an axis from a list of values instead of a uniform grid."""
        checked = tuple(_finite(v, 'value') for v in values)
        if not checked:
            raise SweepValueError(
                f"Axis {name!r} needs at least one value"
            ) from None
        self = cls.__new__(cls)
        self._name = _check_name(name)
        self._start = min(checked)
        self._stop = max(checked)
        self._points = len(checked)
        self._explicit = True
        self._values = checked
        return self

    @property
    def name(self) -> str:
        """The scanned parameter."""
        return self._name

    @property
    def start(self) -> float:
        """The smallest axis value."""
        return self._start

    @property
    def stop(self) -> float:
        """The largest axis value."""
        return self._stop

    @property
    def points(self) -> int:
        """The number of axis values."""
        return self._points

    @property
    def is_explicit(self) -> bool:
        """True if this axis was built from a list of values."""
        return self._explicit

    @property
    def values(self) -> typing.Tuple[float, ...]:
        """The axis values in grid order."""
        return self._values

    def __array__(self, *args, **kwargs):
        """Called for conversion to a `numpy.ndarray`."""
        return numpy.array(self._values, *args, **kwargs)

    def __len__(self) -> int:
        return self._points

    def __eq__(self, other) -> bool:
        if not isinstance(other, SweepAxis):
            return NotImplemented
        return self._name == other._name and self._values == other._values

    def describe(self) -> str:
        """A one-line definition suitable for file metadata."""
        if self._explicit:
            listed = ', '.join(repr(v) for v in self._values)
            return f"{self._name} in {{{listed}}}"
        return (
            f"{self._name} in [{self._start!r}, {self._stop!r}],"
            f" {self._points} points"
        )

    def __str__(self) -> str:
        """A simplified representation of this object."""
        return self.describe()


def _check_name(name: str) -> str:
    if name not in AXIS_NAMES:
        raise SweepValueError(
            f"Unknown axis {name!r}; expected one of"
            f" {etc.join(AXIS_NAMES, 'or', quoted=True)}"
        ) from None
    return name


def _finite(value: typing.Any, name: str) -> float:
    try:
        return coin.parse_angle(value)
    except coin.CoinValueError as err:
        raise SweepValueError(f"Invalid axis {name}: {err}") from None
