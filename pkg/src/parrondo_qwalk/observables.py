"""
Per-step diagnostics of a walker state.

The three recorded quantities are the expected position E[x], the
right-minus-left probability difference ΔP (the origin counts for neither
side), and the von Neumann entropy of the reduced coin state in bits.
"""

import typing

import numpy
import numpy.typing
import scipy.stats

from . import etc
from . import walk


EIGENVALUE_CUTOFF = 1e-15
"""Eigenvalues below this are treated as exactly zero in the entropy."""

EIGENVALUE_SLACK = 1e-10
"""Allowed excursion of density-matrix eigenvalues outside [0, 1]."""


class NumericalValidityError(ArithmeticError):
    """A computed quantity violates its mathematical bounds."""


def probability_distribution(
    state: walk.WalkState,
) -> numpy.typing.NDArray[numpy.float64]:
    """The probability P(x) at every lattice site."""
    return state.probabilities()


def expected_position(state: walk.WalkState) -> float:
    """The mean position Σ x·P(x)."""
    return float(numpy.dot(state.positions, state.probabilities()))


def position_spread(state: walk.WalkState) -> float:
    """The standard deviation of the position distribution."""
    x = state.positions
    p = state.probabilities()
    mean = numpy.dot(x, p)
    variance = numpy.dot((x - mean)**2, p)
    return float(numpy.sqrt(max(variance, 0.0)))


def lr_probability_difference(state: walk.WalkState) -> float:
    """The probability right of the origin minus the probability left of it."""
    p = state.probabilities()
    L = state.half_width
    return float(numpy.sum(p[L+1:]) - numpy.sum(p[:L]))


class CoinDensityMatrix:
    """The 2x2 reduced density matrix of the coin."""

    def __init__(self, data: numpy.typing.ArrayLike) -> None:
        array = numpy.array(data, dtype=numpy.complex128)
        if array.shape != (2, 2):
            raise NumericalValidityError(
                f"A coin density matrix must be 2x2, not {array.shape}"
            ) from None
        array.flags.writeable = False
        self._array = array

    @property
    def array(self) -> numpy.typing.NDArray[numpy.complex128]:
        """The read-only 2x2 array."""
        return self._array

    def trace(self) -> float:
        return float(numpy.real(self._array[0, 0] + self._array[1, 1]))

    def determinant(self) -> float:
        r = self._array
        return float(numpy.real(r[0, 0] * r[1, 1] - r[0, 1] * r[1, 0]))

    def hermiticity_defect(self) -> float:
        """The largest entrywise |ρ − ρ†|."""
        return float(numpy.max(numpy.abs(self._array - self._array.conj().T)))

    def eigenvalues(self) -> typing.Tuple[float, float]:
        """The two eigenvalues, smallest first, from the characteristic
        quadratic λ² − (tr ρ)λ + det ρ = 0."""
        half = 0.5 * self.trace()
        discriminant = half**2 - self.determinant()
        root = numpy.sqrt(max(discriminant, 0.0))
        return float(half - root), float(half + root)

    def __array__(self, *args, **kwargs):
        """Called for conversion to a `numpy.ndarray`."""
        return numpy.array(self._array, *args, **kwargs)

    def __repr__(self) -> str:
        """An unambiguous representation of this object."""
        return f"CoinDensityMatrix({self._array.tolist()})"


def reduced_coin_density(state: walk.WalkState) -> CoinDensityMatrix:
    """Trace the position out of the walker state."""
    a = state.a
    b = state.b
    r00 = numpy.vdot(a, a).real
    r11 = numpy.vdot(b, b).real
    r01 = numpy.vdot(b, a)
    return CoinDensityMatrix([[r00, r01], [numpy.conj(r01), r11]])


def entanglement_entropy(rho: CoinDensityMatrix) -> float:
    """The von Neumann entropy −Tr(ρ log₂ ρ) in bits.

    Raises
    ------
    `~NumericalValidityError`
        An eigenvalue falls outside [−1e-10, 1 + 1e-10].
    """
    values = rho.eigenvalues()
    for value in values:
        if not (-EIGENVALUE_SLACK <= value <= 1.0 + EIGENVALUE_SLACK):
            raise NumericalValidityError(
                f"Density-matrix eigenvalue {value} lies outside [0, 1]"
            ) from None
    entropy = 0.0
    for value in values:
        if value < EIGENVALUE_CUTOFF:
            continue
        entropy -= value * numpy.log2(value)
    return float(min(max(entropy, 0.0), 1.0))


class Observation(typing.NamedTuple):
    """The diagnostics of one state."""

    step: int
    expected_position: float
    delta_p: float
    entropy: float


def observe(state: walk.WalkState) -> Observation:
    """Compute all diagnostics of `state`."""
    return Observation(
        step=state.step_count,
        expected_position=expected_position(state),
        delta_p=lr_probability_difference(state),
        entropy=entanglement_entropy(reduced_coin_density(state)),
    )


@etc.autostr
class ObservableSeries:
    """Diagnostics recorded after each step of an evolution."""

    def __init__(self, observations: typing.Iterable[Observation]) -> None:
        rows = list(observations)
        self._steps = numpy.array([r.step for r in rows], dtype=int)
        self._expected_position = numpy.array(
            [r.expected_position for r in rows], dtype=float
        )
        self._delta_p = numpy.array([r.delta_p for r in rows], dtype=float)
        self._entropy = numpy.array([r.entropy for r in rows], dtype=float)

    @property
    def steps(self) -> numpy.typing.NDArray[numpy.int_]:
        return self._steps

    @property
    def expected_position(self) -> numpy.typing.NDArray[numpy.float64]:
        return self._expected_position

    @property
    def delta_p(self) -> numpy.typing.NDArray[numpy.float64]:
        return self._delta_p

    @property
    def entropy(self) -> numpy.typing.NDArray[numpy.float64]:
        return self._entropy

    def rows(self) -> typing.Iterator[Observation]:
        """Iterate over the recorded observations in step order."""
        for values in zip(
            self._steps,
            self._expected_position,
            self._delta_p,
            self._entropy,
        ):
            yield Observation(int(values[0]), *(float(v) for v in values[1:]))

    def __len__(self) -> int:
        """Called for len(self)."""
        return len(self._steps)

    def __str__(self) -> str:
        """A simplified representation of this object."""
        return f"{len(self)} steps"


class SeriesRecorder:
    """An evolution observer that collects an `~ObservableSeries`.

    Pass an instance as the `observer` argument of `~walk.evolve`, then read
    `series` afterwards.
    """

    def __init__(self) -> None:
        self._observations = []
        self._spreads = []

    def __call__(self, state: walk.WalkState) -> None:
        self._observations.append(observe(state))
        self._spreads.append(position_spread(state))

    @property
    def series(self) -> ObservableSeries:
        """The observations recorded so far."""
        return ObservableSeries(self._observations)

    @property
    def spreads(self) -> numpy.typing.NDArray[numpy.float64]:
        """The position standard deviation after each recorded step."""
        return numpy.array(self._spreads, dtype=float)


def divergent_steps(series: ObservableSeries) -> numpy.typing.NDArray:
    """Steps at which E[x] and ΔP have strictly opposite signs."""
    e = series.expected_position
    d = series.delta_p
    mask = ((e < 0) & (d > 0)) | ((e > 0) & (d < 0))
    return series.steps[mask]


class SpreadingFit(typing.NamedTuple):
    """A straight-line fit of position spread against time."""

    slope: float
    intercept: float
    r_squared: float
    exponent: float


BALLISTIC_R_SQUARED = 0.99
BALLISTIC_EXPONENT = 0.9


def ballistic_fit(
    times: numpy.typing.ArrayLike,
    spreads: numpy.typing.ArrayLike,
) -> SpreadingFit:
    """Fit σ(t) = slope·t + intercept and the log-log growth exponent.

    A quantum walk spreads ballistically (exponent near 1); a classical random
    walk spreads diffusively (exponent near 1/2).
    """
    t = numpy.asarray(times, dtype=float)
    s = numpy.asarray(spreads, dtype=float)
    linear = scipy.stats.linregress(t, s)
    loglog = scipy.stats.linregress(numpy.log(t), numpy.log(s))
    return SpreadingFit(
        slope=float(linear.slope),
        intercept=float(linear.intercept),
        r_squared=float(linear.rvalue**2),
        exponent=float(loglog.slope),
    )


def is_ballistic(fit: SpreadingFit) -> bool:
    """True if `fit` describes linear-in-time spreading."""
    return (
        fit.r_squared > BALLISTIC_R_SQUARED
        and fit.exponent > BALLISTIC_EXPONENT
    )
