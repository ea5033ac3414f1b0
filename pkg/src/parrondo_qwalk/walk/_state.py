"""
Support for walker wavefunctions and initial coin states.
"""

import numbers
import typing

import numpy
import numpy.typing
from typing_extensions import Self

from .. import etc
from ._exceptions import WalkValueError


NORM_TOLERANCE = 1e-10


@etc.autostr
class InitialCoin:
    """The initial coin state cos θ|0⟩ + e^{i·varphi} sin θ|1⟩.

    The closed range [0, 2π] is accepted for `varphi` so that inclusive scan
    grids may reach their upper endpoint.
    """

    def __init__(self, theta: numbers.Real, varphi: numbers.Real) -> None:
        theta = float(theta)
        varphi = float(varphi)
        if not (numpy.isfinite(theta) and 0.0 <= theta <= numpy.pi):
            raise WalkValueError(
                f"Initial-coin theta must lie in [0, π], got {theta}"
            ) from None
        if not (numpy.isfinite(varphi) and 0.0 <= varphi <= 2.0*numpy.pi):
            raise WalkValueError(
                f"Initial-coin varphi must lie in [0, 2π], got {varphi}"
            ) from None
        self._theta = theta
        self._varphi = varphi

    @classmethod
    def standard(cls) -> Self:
        """The balanced state (|0⟩ − i|1⟩)/√2."""
        return cls(numpy.pi / 4, 3 * numpy.pi / 2)

    @property
    def theta(self) -> float:
        """The mixing angle between |0⟩ and |1⟩."""
        return self._theta

    @property
    def varphi(self) -> float:
        """The relative phase of the |1⟩ component."""
        return self._varphi

    def amplitudes(self) -> typing.Tuple[complex, complex]:
        """The coin amplitudes (a, b) at the origin."""
        a = complex(numpy.cos(self._theta))
        b = complex(numpy.exp(1j * self._varphi) * numpy.sin(self._theta))
        return a, b

    def __eq__(self, other) -> bool:
        """Called for self == other."""
        if isinstance(other, InitialCoin):
            return (self.theta, self.varphi) == (other.theta, other.varphi)
        return NotImplemented

    def __hash__(self) -> int:
        """Called for hash(self)."""
        return hash((self._theta, self._varphi))

    def __str__(self) -> str:
        """A simplified representation of this object."""
        return f"theta={self._theta}, varphi={self._varphi}"


@etc.autostr
class WalkState:
    """The walker wavefunction on the lattice [−L, L].

    The amplitudes of coin |0⟩ and coin |1⟩ live in two complex arrays of
    length 2L + 1, indexed by x + L. The state belongs to whichever simulation
    created it; the stepping functions return new states instead of writing
    into this one.
    """

    def __init__(
        self,
        half_width: int,
        a: numpy.typing.ArrayLike,
        b: numpy.typing.ArrayLike,
        step_count: int=0,
    ) -> None:
        self._half_width = int(half_width)
        self._a = numpy.asarray(a, dtype=numpy.complex128)
        self._b = numpy.asarray(b, dtype=numpy.complex128)
        self._step_count = int(step_count)
        size = 2 * self._half_width + 1
        if self._a.shape != (size,) or self._b.shape != (size,):
            raise WalkValueError(
                f"Amplitude arrays must have shape ({size},) for half-width"
                f" {self._half_width}, got {self._a.shape} and {self._b.shape}"
            ) from None
        if self._step_count < 0:
            raise WalkValueError("Step count must be nonnegative") from None

    @property
    def half_width(self) -> int:
        """The lattice bound L; positions run from −L to L."""
        return self._half_width

    @property
    def a(self) -> numpy.typing.NDArray[numpy.complex128]:
        """The coin-|0⟩ amplitudes, indexed by x + L."""
        return self._a

    @property
    def b(self) -> numpy.typing.NDArray[numpy.complex128]:
        """The coin-|1⟩ amplitudes, indexed by x + L."""
        return self._b

    @property
    def step_count(self) -> int:
        """The number of steps applied since initialization."""
        return self._step_count

    @property
    def positions(self) -> numpy.typing.NDArray[numpy.int64]:
        """The lattice positions −L, ..., L."""
        return numpy.arange(-self._half_width, self._half_width + 1)

    def index(self, x: int) -> int:
        """The array index of position `x`."""
        if abs(x) > self._half_width:
            raise WalkValueError(
                f"Position {x} lies outside [-{self._half_width},"
                f" {self._half_width}]"
            ) from None
        return x + self._half_width

    def amplitudes(self, x: int) -> typing.Tuple[complex, complex]:
        """The pair (a_x, b_x) at position `x`."""
        i = self.index(x)
        return complex(self._a[i]), complex(self._b[i])

    def probabilities(self) -> numpy.typing.NDArray[numpy.float64]:
        """The position distribution P(x) = |a_x|² + |b_x|²."""
        return (
            self._a.real**2 + self._a.imag**2
            + self._b.real**2 + self._b.imag**2
        )

    def norm(self) -> float:
        """The total probability Σ_x P(x)."""
        return float(numpy.sum(self.probabilities()))

    def copy(self) -> Self:
        """Create an independent copy of this state."""
        return type(self)(
            self._half_width,
            self._a.copy(),
            self._b.copy(),
            self._step_count,
        )

    def __str__(self) -> str:
        """A simplified representation of this object."""
        return f"L={self._half_width}, t={self._step_count}"


def init_state(coin: InitialCoin, half_width: int) -> WalkState:
    """Place the walker at the origin with the given coin state."""
    if not isinstance(half_width, numbers.Integral) or half_width < 1:
        raise WalkValueError(
            f"Lattice half-width must be a positive integer, got {half_width}"
        ) from None
    size = 2 * half_width + 1
    a = numpy.zeros(size, dtype=numpy.complex128)
    b = numpy.zeros(size, dtype=numpy.complex128)
    a[half_width], b[half_width] = coin.amplitudes()
    return WalkState(half_width, a, b, step_count=0)
