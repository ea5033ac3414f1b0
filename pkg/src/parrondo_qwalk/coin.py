"""
Support for SU(2) coin operators.

A coin is the 2x2 unitary that acts on the walker's internal qubit before
each conditional shift. This module builds coins from three angles, applies
the scalar phase used at the origin, and parses the compact text form used
on the command line (``2.395,0.513,0.909`` or ``10d,45d,0d``).
"""

import numbers
import typing

import numpy
import numpy.typing
from typing_extensions import Self

from . import etc


TWO_PI = 2.0 * numpy.pi

UNITARITY_TOLERANCE = 1e-12
"""Maximum entrywise deviation of M†M from the identity."""


class CoinValueError(ValueError):
    """Invalid coin angle or coin description."""


def _finite(value: typing.Any, name: str) -> float:
    """Convert `value` to a finite float or raise `CoinValueError`."""
    try:
        x = float(value)
    except (TypeError, ValueError):
        raise CoinValueError(
            f"Cannot interpret {value!r} as an angle for {name}"
        ) from None
    if not numpy.isfinite(x):
        raise CoinValueError(f"Angle {name} must be finite, got {x}") from None
    return x


def normalize_angle(value: float) -> float:
    """Reduce a finite angle into [0, 2π)."""
    x = float(numpy.mod(_finite(value, 'angle'), TWO_PI))
    # numpy.mod may round a tiny negative input up to exactly 2π
    return 0.0 if x == TWO_PI else x


@etc.autostr
class CoinParams:
    """The three SU(2) angles that define a coin operator.

    Angles are given in radians and stored reduced into [0, 2π). The original
    text of each angle, when the instance came from `parse_coin`, is available
    through `source` so that output metadata can echo user input verbatim.
    """

    def __init__(
        self,
        alpha: numbers.Real,
        beta: numbers.Real,
        gamma: numbers.Real,
        source: typing.Optional[str]=None,
    ) -> None:
        self._alpha = normalize_angle(_finite(alpha, 'alpha'))
        self._beta = normalize_angle(_finite(beta, 'beta'))
        self._gamma = normalize_angle(_finite(gamma, 'gamma'))
        self._source = source

    @property
    def alpha(self) -> float:
        """The diagonal phase angle."""
        return self._alpha

    @property
    def beta(self) -> float:
        """The bias angle."""
        return self._beta

    @property
    def gamma(self) -> float:
        """The off-diagonal phase angle."""
        return self._gamma

    @property
    def source(self) -> str:
        """The text this instance came from, or its canonical form."""
        if self._source is None:
            return ','.join(repr(v) for v in self)
        return self._source

    def degrees(self) -> typing.Tuple[float, float, float]:
        """The normalized angles in degrees."""
        return tuple(float(numpy.rad2deg(v)) for v in self)

    def replace(self, **angles: numbers.Real) -> Self:
        """Create a copy with some angles replaced."""
        unknown = set(angles) - {'alpha', 'beta', 'gamma'}
        if unknown:
            raise CoinValueError(
                f"Unknown coin angle(s): {etc.join(sorted(unknown))}"
            ) from None
        current = dict(zip(('alpha', 'beta', 'gamma'), self))
        current.update(angles)
        return type(self)(**current)

    def __iter__(self) -> typing.Iterator[float]:
        """Called for iter(self)."""
        return iter((self._alpha, self._beta, self._gamma))

    def __eq__(self, other) -> bool:
        """Called for self == other."""
        if isinstance(other, CoinParams):
            return tuple(self) == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        """Called for hash(self)."""
        return hash(tuple(self))

    def __str__(self) -> str:
        """A simplified representation of this object."""
        return f"alpha={self._alpha}, beta={self._beta}, gamma={self._gamma}"


class CoinMatrix:
    """A dense 2x2 complex coin matrix.

    Instances wrap a read-only `numpy` array and never change after creation.
    """

    def __init__(self, data: numpy.typing.ArrayLike) -> None:
        array = numpy.array(data, dtype=numpy.complex128)
        if array.shape != (2, 2):
            raise CoinValueError(
                f"A coin matrix must have shape (2, 2), not {array.shape}"
            ) from None
        array.flags.writeable = False
        self._array = array

    @property
    def array(self) -> numpy.typing.NDArray[numpy.complex128]:
        """The read-only 2x2 array."""
        return self._array

    @property
    def m00(self) -> complex:
        return complex(self._array[0, 0])

    @property
    def m01(self) -> complex:
        return complex(self._array[0, 1])

    @property
    def m10(self) -> complex:
        return complex(self._array[1, 0])

    @property
    def m11(self) -> complex:
        return complex(self._array[1, 1])

    def determinant(self) -> complex:
        """The determinant m00·m11 − m01·m10."""
        return self.m00 * self.m11 - self.m01 * self.m10

    def __array__(self, *args, **kwargs):
        """Called for conversion to a `numpy.ndarray`."""
        return numpy.array(self._array, *args, **kwargs)

    def __eq__(self, other) -> bool:
        """Called for self == other."""
        if isinstance(other, CoinMatrix):
            return numpy.array_equal(self._array, other._array)
        return NotImplemented

    def __repr__(self) -> str:
        """An unambiguous representation of this object."""
        return f"CoinMatrix({self._array.tolist()})"


def build_coin(params: CoinParams) -> CoinMatrix:
    """Create the SU(2) coin for the given angles.

    The result is::

        [[ e^{iα} cos β,  -e^{-iγ} sin β],
         [ e^{iγ} sin β,   e^{-iα} cos β]]
    """
    if not isinstance(params, CoinParams):
        raise CoinValueError(
            f"Expected coin parameters, got {type(params)}"
        ) from None
    alpha, beta, gamma = params
    c = numpy.cos(beta)
    s = numpy.sin(beta)
    return CoinMatrix(
        [
            [numpy.exp(1j * alpha) * c, -numpy.exp(-1j * gamma) * s],
            [numpy.exp(1j * gamma) * s, numpy.exp(-1j * alpha) * c],
        ]
    )


def phase_factor(phi: numbers.Real) -> complex:
    """Compute e^{iφ} from the normalized angle."""
    return complex(numpy.exp(1j * normalize_angle(_finite(phi, 'phi'))))


def apply_origin_phase(coin: CoinMatrix, phi: numbers.Real) -> CoinMatrix:
    """Multiply every entry of `coin` by e^{iφ}."""
    return CoinMatrix(phase_factor(phi) * coin.array)


def unitarity_defect(m: typing.Union[CoinMatrix, numpy.typing.ArrayLike]):
    """The largest entrywise |M†M − I|."""
    array = numpy.asarray(m, dtype=numpy.complex128)
    product = array.conj().T @ array
    return float(numpy.max(numpy.abs(product - numpy.eye(2))))


def isunitary(m: CoinMatrix, tolerance: float=UNITARITY_TOLERANCE) -> bool:
    """True if `m` is unitary within `tolerance`."""
    return unitarity_defect(m) < tolerance


DEGREE_SUFFIX = 'd'


def parse_angle(text: typing.Union[str, numbers.Real]) -> float:
    """Convert an angle string to radians.

    Plain numbers are radians. A trailing ``d`` marks degrees, so ``45d`` and
    ``0.7853981633974483`` denote the same angle.
    """
    if isinstance(text, numbers.Real):
        return _finite(text, 'angle')
    string = str(text).strip()
    if string.endswith(DEGREE_SUFFIX):
        degrees = _finite(string[:-1], string)
        return float(numpy.deg2rad(degrees))
    return _finite(string, string)


def parse_coin(text: str) -> CoinParams:
    """Create coin parameters from ``alpha,beta,gamma`` text."""
    parts = [p.strip() for p in str(text).split(',')]
    if len(parts) != 3 or not all(parts):
        raise CoinValueError(
            f"A coin needs three comma-separated angles, got {text!r}"
        ) from None
    alpha, beta, gamma = (parse_angle(p) for p in parts)
    return CoinParams(alpha, beta, gamma, source=','.join(parts))


PRESET_COIN_A = CoinParams(2.395, 0.513, 0.909)
"""Coin A of the phase and initial-state experiments."""

PRESET_COIN_B = CoinParams(2.611, 1.176, 2.313)
"""Coin B of the phase and initial-state experiments."""
