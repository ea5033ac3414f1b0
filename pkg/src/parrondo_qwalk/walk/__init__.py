"""
Discrete-time quantum walks with an origin phase and a two-coin schedule.
"""

from ._exceptions import (
    CapacityError,
    WalkValueError,
)
from ._state import (
    NORM_TOLERANCE,
    InitialCoin,
    WalkState,
    init_state,
)
from ._game import (
    GameSpec,
    coin_for_step,
    validate_sequence,
)
from ._engine import (
    Experiment,
    Observer,
    evolve,
    step,
)
from ._oracle import (
    MAX_ORACLE_STEPS,
    dense_oracle_evolve,
    step_unitary,
)


__all__ = [
    'CapacityError',
    'WalkValueError',
    'NORM_TOLERANCE',
    'InitialCoin',
    'WalkState',
    'init_state',
    'GameSpec',
    'coin_for_step',
    'validate_sequence',
    'Experiment',
    'Observer',
    'evolve',
    'step',
    'MAX_ORACLE_STEPS',
    'dense_oracle_evolve',
    'step_unitary',
]
