"""
The coin-then-shift step and its repetition over a game sequence.
"""

import numbers
import typing

import numpy

from .. import coin
from .. import etc
from ._exceptions import CapacityError, WalkValueError
from ._game import GameSpec, coin_for_step
from ._state import InitialCoin, WalkState, init_state


Observer = typing.Callable[[WalkState], typing.Any]


def step(
    state: WalkState,
    matrix: coin.CoinMatrix,
    phi: numbers.Real,
    *,
    origin: typing.Optional[coin.CoinMatrix]=None,
) -> WalkState:
    """Apply one coin stage and one conditional shift.

    Every site x ≠ 0 gets ``matrix``; the origin gets ``e^{iφ}·matrix``. Coin
    |0⟩ then moves one site right and coin |1⟩ one site left. Only the light
    cone [−t, t] of the current state is touched, so the returned state is
    supported on [−(t+1), t+1] exactly.

    Callers that repeat the same coin may pass the precomputed origin matrix
    through `origin`; it must equal ``apply_origin_phase(matrix, phi)``.

    Raises
    ------
    `~CapacityError`
        The shifted state would reach the lattice boundary.
    """
    L = state.half_width
    t = state.step_count
    if t + 1 > L:
        raise CapacityError(
            f"Step {t + 1} would leave a lattice with half-width {L}; allocate"
            " at least as many sites as steps"
        ) from None
    lo = L - t
    hi = L + t + 1
    a = state.a[lo:hi]
    b = state.b[lo:hi]
    m = matrix.array
    ca = m[0, 0] * a + m[0, 1] * b
    cb = m[1, 0] * a + m[1, 1] * b
    if origin is None:
        origin = coin.apply_origin_phase(matrix, phi)
    m0 = origin.array
    o = L - lo
    ca[o] = m0[0, 0] * a[o] + m0[0, 1] * b[o]
    cb[o] = m0[1, 0] * a[o] + m0[1, 1] * b[o]
    new_a = numpy.zeros_like(state.a)
    new_b = numpy.zeros_like(state.b)
    new_a[lo+1:hi+1] = ca
    new_b[lo-1:hi-1] = cb
    return WalkState(L, new_a, new_b, step_count=t + 1)


def evolve(
    spec: GameSpec,
    initial: InitialCoin,
    steps: int,
    observer: typing.Optional[Observer]=None,
) -> WalkState:
    """Play `steps` rounds of the game from the given initial coin.

    The lattice half-width equals `steps`, which is the smallest boundary-free
    size. Step t plays ``coin_for_step(spec.sequence, t)`` and both coins
    receive the origin phase. If given, `observer` is called with the state
    after every step.
    """
    if not isinstance(steps, numbers.Integral) or steps < 1:
        raise WalkValueError(
            f"Number of steps must be a positive integer, got {steps!r}"
        ) from None
    state = init_state(initial, int(steps))
    phi = spec.origin_phase
    for t in range(steps):
        label = coin_for_step(spec.sequence, t)
        state = step(
            state,
            spec.matrices[label],
            phi,
            origin=spec.origin_matrices[label],
        )
        if observer is not None:
            observer(state)
    return state


@etc.autostr
class Experiment:
    """A game, an initial coin, and a number of steps."""

    def __init__(
        self,
        game: GameSpec,
        initial: InitialCoin,
        steps: int,
    ) -> None:
        if not isinstance(steps, numbers.Integral) or steps < 1:
            raise WalkValueError(
                f"Number of steps must be a positive integer, got {steps!r}"
            ) from None
        self._game = game
        self._initial = initial
        self._steps = int(steps)

    @property
    def game(self) -> GameSpec:
        """The game to play."""
        return self._game

    @property
    def initial(self) -> InitialCoin:
        """The coin state at t = 0."""
        return self._initial

    @property
    def steps(self) -> int:
        """The number of steps to play."""
        return self._steps

    def evolve(self, observer: typing.Optional[Observer]=None) -> WalkState:
        """Run this experiment."""
        return evolve(self._game, self._initial, self._steps, observer)

    def __str__(self) -> str:
        """A simplified representation of this object."""
        return f"{self._game}, initial=({self._initial}), steps={self._steps}"
