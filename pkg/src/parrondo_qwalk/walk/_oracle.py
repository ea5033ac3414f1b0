"""
Independent dense-matrix evolution used to verify the site-by-site stepper.
"""

import numbers

import numpy
import numpy.typing

from .. import coin
from ._exceptions import CapacityError, WalkValueError
from ._game import GameSpec, coin_for_step
from ._state import InitialCoin, WalkState, init_state


MAX_ORACLE_STEPS = 8


def step_unitary(
    matrix: coin.CoinMatrix,
    phi: numbers.Real,
    half_width: int,
) -> numpy.typing.NDArray[numpy.complex128]:
    """Build the full step operator S·(C ⊗ I) as a dense matrix.

    The basis is coin-major: index ``c * (2L + 1) + (x + L)`` for coin value
    c ∈ {0, 1} and position x. The coin block at the origin carries the extra
    phase e^{iφ}.
    """
    n = 2 * half_width + 1
    origin = numpy.zeros((n, n))
    origin[half_width, half_width] = 1.0
    bulk = numpy.eye(n) - origin
    m = matrix.array
    m0 = coin.apply_origin_phase(matrix, phi).array
    coin_stage = numpy.kron(m, bulk) + numpy.kron(m0, origin)
    right = numpy.eye(n, k=-1)
    left = numpy.eye(n, k=1)
    up = numpy.diag([1.0, 0.0])
    down = numpy.diag([0.0, 1.0])
    shift = numpy.kron(up, right) + numpy.kron(down, left)
    return shift @ coin_stage


def dense_oracle_evolve(
    spec: GameSpec,
    initial: InitialCoin,
    steps: int,
) -> WalkState:
    """Evolve by explicit matrix-vector products with the full step operator.

    This is slow and limited to `MAX_ORACLE_STEPS`; its only purpose is to
    check `~evolve` amplitude by amplitude.
    """
    if not isinstance(steps, numbers.Integral) or steps < 0:
        raise WalkValueError(
            f"Number of steps must be a nonnegative integer, got {steps!r}"
        ) from None
    if steps > MAX_ORACLE_STEPS:
        raise CapacityError(
            f"The dense oracle supports at most {MAX_ORACLE_STEPS} steps,"
            f" got {steps}"
        ) from None
    half_width = max(int(steps), 1)
    start = init_state(initial, half_width)
    n = 2 * half_width + 1
    psi = numpy.concatenate([start.a, start.b])
    unitaries = {
        label: step_unitary(matrix, spec.origin_phase, half_width)
        for label, matrix in spec.matrices.items()
    }
    for t in range(steps):
        psi = unitaries[coin_for_step(spec.sequence, t)] @ psi
    return WalkState(half_width, psi[:n], psi[n:], step_count=int(steps))
