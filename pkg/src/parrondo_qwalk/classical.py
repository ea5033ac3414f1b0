"""
The classical capital-dependent Parrondo games.

Game A wins with probability 1/2 − c. Game B looks at the capital modulo 3:
from state 0 it wins with probability 1/10 − c, otherwise with 3/4 − c. Each
win adds one unit of capital and each loss removes one.
"""

import numbers
import typing

import numpy
import numpy.typing
import scipy.linalg

from . import etc
from . import walk


MAX_BIAS = 0.1
ROW_SUM_TOLERANCE = 1e-14
STATIONARY_TOLERANCE = 1e-10
TRIAL_BLOCK = 1024


class ClassicalValueError(ValueError):
    """Invalid classical-game argument."""


class NumericalError(ArithmeticError):
    """A linear-algebra computation failed or is untrustworthy."""


@etc.autostr
class ClassicalParams:
    """The bias c and the win probabilities derived from it."""

    def __init__(self, c: numbers.Real) -> None:
        try:
            bias = float(c)
        except (TypeError, ValueError):
            raise ClassicalValueError(
                f"Cannot interpret {c!r} as a bias"
            ) from None
        if not (numpy.isfinite(bias) and 0.0 <= bias < MAX_BIAS):
            raise ClassicalValueError(
                f"The bias c must satisfy 0 <= c < {MAX_BIAS}, got {c}"
            ) from None
        self._c = bias

    @property
    def c(self) -> float:
        """The bias subtracted from every win probability."""
        return self._c

    @property
    def p_a(self) -> float:
        """Win probability of game A."""
        return 0.5 - self._c

    @property
    def p_b1(self) -> float:
        """Win probability of game B when capital ≡ 0 (mod 3)."""
        return 0.1 - self._c

    @property
    def p_b2(self) -> float:
        """Win probability of game B otherwise."""
        return 0.75 - self._c

    def __str__(self) -> str:
        """A simplified representation of this object."""
        return f"c={self._c}"


def transition_matrix(params: ClassicalParams) -> numpy.typing.NDArray:
    """The game-B Markov chain over capital mod 3.

    Rows are from-states. Winning moves the state forward by one, losing moves
    it back by one::

        [[0,        p_B1,     1 − p_B1],
         [1 − p_B2, 0,        p_B2    ],
         [p_B2,     1 − p_B2, 0       ]]
    """
    p1 = params.p_b1
    p2 = params.p_b2
    T = numpy.array(
        [
            [0.0, p1, 1.0 - p1],
            [1.0 - p2, 0.0, p2],
            [p2, 1.0 - p2, 0.0],
        ]
    )
    return T


def check_stochastic(T: numpy.typing.ArrayLike) -> numpy.typing.NDArray:
    """Return `T` as an array if it is a valid row-stochastic matrix."""
    array = numpy.asarray(T, dtype=float)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise ClassicalValueError(
            f"A transition matrix must be square, got shape {array.shape}"
        ) from None
    if numpy.any(array < 0.0) or numpy.any(array > 1.0):
        raise ClassicalValueError(
            "Transition probabilities must lie in [0, 1]"
        ) from None
    sums = array.sum(axis=1)
    if numpy.max(numpy.abs(sums - 1.0)) > ROW_SUM_TOLERANCE:
        raise ClassicalValueError(
            f"Transition-matrix rows must sum to 1, got {sums.tolist()}"
        ) from None
    return array


def stationary_distribution(T: numpy.typing.ArrayLike) -> numpy.typing.NDArray:
    """Solve d·T = d with Σd = 1.

    The system (Tᵀ − I)d = 0 is made nonsingular by replacing its last row
    with the normalization condition. The solution is accepted only if it is
    nonnegative and stationary to within `STATIONARY_TOLERANCE`.

    Raises
    ------
    `~NumericalError`
        The system is singular or ill-conditioned, or the solution fails the
        acceptance checks.
    """
    array = check_stochastic(T)
    n = array.shape[0]
    system = array.T - numpy.eye(n)
    system[-1, :] = 1.0
    rhs = numpy.zeros(n)
    rhs[-1] = 1.0
    if numpy.linalg.cond(system) > 1e12:
        raise NumericalError(
            "Stationary system is ill-conditioned; is the chain reducible?"
        ) from None
    try:
        d = scipy.linalg.solve(system, rhs)
    except (scipy.linalg.LinAlgError, ValueError) as err:
        raise NumericalError(f"Stationary solve failed: {err}") from err
    if numpy.any(d < -STATIONARY_TOLERANCE):
        raise NumericalError(
            f"Stationary solution has negative components: {d.tolist()}"
        ) from None
    d = numpy.clip(d, 0.0, None)
    residual = numpy.max(numpy.abs(d @ array - d))
    if residual > STATIONARY_TOLERANCE:
        raise NumericalError(
            f"Stationary residual {residual} exceeds {STATIONARY_TOLERANCE}"
        ) from None
    return d


def power_iteration(
    T: numpy.typing.ArrayLike,
    steps: int,
    start: typing.Optional[numpy.typing.ArrayLike]=None,
) -> numpy.typing.NDArray:
    """Propagate a distribution through `steps` transitions.

    The matrix power is formed by repeated squaring, so even a million steps
    costs only a few dozen 3x3 products.
    """
    array = check_stochastic(T)
    n = array.shape[0]
    d0 = (
        numpy.full(n, 1.0 / n) if start is None
        else numpy.asarray(start, dtype=float)
    )
    return d0 @ numpy.linalg.matrix_power(array, int(steps))


def expected_winnings(params: ClassicalParams) -> numpy.typing.NDArray:
    """The per-state expected gain 2p − 1 of game B."""
    return numpy.array(
        [
            2.0 * params.p_b1 - 1.0,
            2.0 * params.p_b2 - 1.0,
            2.0 * params.p_b2 - 1.0,
        ]
    )


def game_a_expected_value(params: ClassicalParams) -> float:
    """The expected gain per play of game A."""
    return 2.0 * params.p_a - 1.0


def game_b_expected_value(params: ClassicalParams) -> float:
    """The stationary expected gain per play of game B."""
    d = stationary_distribution(transition_matrix(params))
    return float(numpy.dot(d, expected_winnings(params)))


@etc.autostr
class ClassicalTrajectory:
    """Mean capital after each play, averaged over independent trials."""

    def __init__(
        self,
        sequence: str,
        params: ClassicalParams,
        seed: int,
        trials: int,
        mean_capital: numpy.typing.ArrayLike,
        stderr: numpy.typing.ArrayLike,
    ) -> None:
        self._sequence = sequence
        self._params = params
        self._seed = seed
        self._trials = trials
        self._mean_capital = numpy.asarray(mean_capital, dtype=float)
        self._stderr = numpy.asarray(stderr, dtype=float)

    @property
    def sequence(self) -> str:
        return self._sequence

    @property
    def params(self) -> ClassicalParams:
        return self._params

    @property
    def seed(self) -> int:
        return self._seed

    @property
    def trials(self) -> int:
        return self._trials

    @property
    def steps(self) -> numpy.typing.NDArray[numpy.int_]:
        """Play numbers 1, 2, ..., N."""
        return numpy.arange(1, len(self._mean_capital) + 1)

    @property
    def mean_capital(self) -> numpy.typing.NDArray[numpy.float64]:
        """Mean capital after each play."""
        return self._mean_capital

    @property
    def stderr(self) -> numpy.typing.NDArray[numpy.float64]:
        """Standard error of the mean capital after each play."""
        return self._stderr

    @property
    def extension(self) -> bool:
        """True for sequences that mix both games."""
        return 'A' in self._sequence and 'B' in self._sequence

    def __str__(self) -> str:
        """A simplified representation of this object."""
        return (
            f"sequence={self._sequence!r}, {self._params},"
            f" trials={self._trials}, seed={self._seed}"
        )


def trial_generator(seed: int, trial: int) -> numpy.random.Generator:
    """The random stream of one trial.

    Each stream depends only on (seed, trial), so the number of trials and the
    way they are grouped never change an individual trial's draws.
    """
    sequence = numpy.random.SeedSequence(entropy=seed, spawn_key=(trial,))
    return numpy.random.Generator(numpy.random.PCG64(sequence))


def simulate_classical(
    sequence: str,
    params: ClassicalParams,
    steps: int,
    trials: int,
    seed: int,
) -> ClassicalTrajectory:
    """Monte Carlo estimate of mean capital under a game sequence.

    Play t uses ``sequence[t mod len(sequence)]``. Every trial starts from zero
    capital. Sums are accumulated as integers in trial order, so the result
    is bit-reproducible for a given seed.
    """
    try:
        walk.validate_sequence(sequence)
    except walk.WalkValueError as err:
        raise ClassicalValueError(str(err)) from None
    for name, value in (('steps', steps), ('trials', trials)):
        if not isinstance(value, numbers.Integral) or value < 1:
            raise ClassicalValueError(
                f"{name} must be a positive integer, got {value!r}"
            ) from None
    if not isinstance(seed, numbers.Integral) or seed < 0:
        raise ClassicalValueError(
            f"seed must be a nonnegative integer, got {seed!r}"
        ) from None
    total = numpy.zeros(steps, dtype=numpy.int64)
    total_sq = numpy.zeros(steps, dtype=numpy.int64)
    plays = [sequence[t % len(sequence)] for t in range(steps)]
    for first in range(0, trials, TRIAL_BLOCK):
        block = range(first, min(first + TRIAL_BLOCK, trials))
        draws = numpy.stack(
            [trial_generator(seed, trial).random(steps) for trial in block]
        )
        capital = numpy.zeros(len(block), dtype=numpy.int64)
        for t, game in enumerate(plays):
            if game == 'A':
                p = params.p_a
            else:
                p = numpy.where(capital % 3 == 0, params.p_b1, params.p_b2)
            capital += numpy.where(draws[:, t] < p, 1, -1)
            total[t] += capital.sum()
            total_sq[t] += (capital * capital).sum()
    mean = total / trials
    if trials > 1:
        variance = (total_sq - trials * mean**2) / (trials - 1)
        stderr = numpy.sqrt(numpy.clip(variance, 0.0, None) / trials)
    else:
        stderr = numpy.zeros(steps)
    return ClassicalTrajectory(
        sequence=sequence,
        params=params,
        seed=int(seed),
        trials=int(trials),
        mean_capital=mean,
        stderr=stderr,
    )


class Slope(typing.NamedTuple):
    """Mean gain per play and its standard error."""

    value: float
    stderr: float


def slope(trajectory: ClassicalTrajectory, burn_in: int=0) -> Slope:
    """Mean gain per play between `burn_in` and the final play.

    The error combines the two end-point standard errors in quadrature, which
    overestimates the error of the difference for positively correlated
    capitals.
    """
    mean = trajectory.mean_capital
    err = trajectory.stderr
    n = len(mean)
    if not 0 <= burn_in < n:
        raise ClassicalValueError(
            f"burn_in must lie in [0, {n}), got {burn_in}"
        ) from None
    start_mean = 0.0 if burn_in == 0 else mean[burn_in - 1]
    start_err = 0.0 if burn_in == 0 else err[burn_in - 1]
    span = n - burn_in
    value = (mean[-1] - start_mean) / span
    stderr = numpy.hypot(err[-1], start_err) / span
    return Slope(float(value), float(stderr))
