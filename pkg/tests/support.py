"""
Utilities for `parrondo_qwalk` tests.
"""
import typing

import numpy

from parrondo_qwalk import coin
from parrondo_qwalk import sweep
from parrondo_qwalk import walk


def random_coin(rng: numpy.random.Generator) -> coin.CoinParams:
    """Draw coin angles uniformly from [0, 2π)."""
    alpha, beta, gamma = rng.uniform(0.0, 2 * numpy.pi, size=3)
    return coin.CoinParams(alpha, beta, gamma)


def random_sequence(rng: numpy.random.Generator, longest: int=4) -> str:
    """Draw a game pattern of length 1 to `longest`."""
    length = int(rng.integers(1, longest + 1))
    return ''.join(rng.choice(['A', 'B'], size=length))


def random_initial(rng: numpy.random.Generator) -> walk.InitialCoin:
    """Draw an initial coin state from the allowed ranges."""
    return walk.InitialCoin(
        rng.uniform(0.0, numpy.pi),
        rng.uniform(0.0, 2 * numpy.pi),
    )


def random_game(rng: numpy.random.Generator) -> walk.GameSpec:
    """Draw a complete game with random coins, pattern, and phase."""
    return walk.GameSpec(
        random_coin(rng),
        random_coin(rng),
        random_sequence(rng),
        rng.uniform(0.0, 2 * numpy.pi),
    )


def configurations(
    seed: int,
    count: int,
) -> typing.Iterator[typing.Tuple[walk.GameSpec, walk.InitialCoin]]:
    """Generate reproducible random (game, initial coin) pairs."""
    rng = numpy.random.default_rng(seed)
    for _ in range(count):
        yield random_game(rng), random_initial(rng)


def max_amplitude_difference(s0: walk.WalkState, s1: walk.WalkState) -> float:
    """The largest |Δa| or |Δb| between two states on the same lattice."""
    return float(
        max(
            numpy.max(numpy.abs(s0.a - s1.a)),
            numpy.max(numpy.abs(s0.b - s1.b)),
        )
    )


def small_sweep(axes, **changes):
    """Create a short sweep around the preset coins."""
    options = {
        'sequences': ('A', 'ABB'),
        'coin_a': coin.PRESET_COIN_A,
        'coin_b': coin.PRESET_COIN_B,
        'phi': numpy.pi / 2,
        'initial': walk.InitialCoin.standard(),
        'steps': 5,
        'axes': axes,
    }
    options.update(changes)
    return sweep.SweepSpec(**options)
