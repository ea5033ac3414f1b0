"""
Named sweeps that cover each family of published experiments.
"""

import typing

import numpy

from .. import coin
from .. import etc
from .. import walk
from ._axes import SweepAxis
from ._exceptions import SweepValueError
from ._spec import FINAL_ONLY, FULL_SERIES, SweepSpec


LINE_POINTS = 128
"""Resolution of one-dimensional preset grids."""

GRID_POINTS = 64
"""Resolution of each axis of two-dimensional preset grids."""

PRESET_STEPS = 100

PHASE_LINE_VALUES = (
    0.0,
    numpy.pi / 4,
    numpy.pi / 2,
    numpy.pi,
    3 * numpy.pi / 2,
)

_TWO_PI = 2 * numpy.pi
_BETA_45 = numpy.pi / 4
_FIXED_PHI = numpy.pi / 2
_ALL_SEQUENCES = ('A', 'B', 'AB', 'ABB')
_SINGLE_COINS = ('A', 'B')


def _phase_scan() -> SweepSpec:
    """E[x] against step count and origin phase for all four sequences."""
    return SweepSpec(
        sequences=_ALL_SEQUENCES,
        coin_a=coin.PRESET_COIN_A,
        coin_b=coin.PRESET_COIN_B,
        phi=0.0,
        initial=walk.InitialCoin.standard(),
        steps=PRESET_STEPS,
        axes=[SweepAxis('phi', 0.0, _TWO_PI, LINE_POINTS)],
        record=FULL_SERIES,
        name='phase-scan',
    )


def _phase_lines() -> SweepSpec:
    """E[x] against step count at five selected origin phases."""
    return SweepSpec(
        sequences=_ALL_SEQUENCES,
        coin_a=coin.PRESET_COIN_A,
        coin_b=coin.PRESET_COIN_B,
        phi=0.0,
        initial=walk.InitialCoin.standard(),
        steps=PRESET_STEPS,
        axes=[SweepAxis.explicit('phi', PHASE_LINE_VALUES)],
        record=FULL_SERIES,
        name='phase-lines',
    )


def _initial_state_scan() -> SweepSpec:
    """Final E[x] over the initial coin parameters θ and varphi."""
    return SweepSpec(
        sequences=_ALL_SEQUENCES,
        coin_a=coin.PRESET_COIN_A,
        coin_b=coin.PRESET_COIN_B,
        phi=_FIXED_PHI,
        initial=walk.InitialCoin.standard(),
        steps=PRESET_STEPS,
        axes=[
            SweepAxis('theta', 0.0, numpy.pi, GRID_POINTS),
            SweepAxis('varphi', 0.0, _TWO_PI, GRID_POINTS),
        ],
        record=FINAL_ONLY,
        name='initial-state-scan',
    )


def _beta_scan() -> SweepSpec:
    """Final E[x] of each single-coin walk over the bias angle β."""
    return SweepSpec(
        sequences=_SINGLE_COINS,
        coin_a=coin.PRESET_COIN_A,
        coin_b=coin.PRESET_COIN_B,
        phi=_FIXED_PHI,
        initial=walk.InitialCoin.standard(),
        steps=PRESET_STEPS,
        axes=[SweepAxis('beta', 0.0, numpy.pi, LINE_POINTS)],
        record=FINAL_ONLY,
        name='beta-scan',
    )


def _beta_pair_scan() -> SweepSpec:
    """Final E[x] of the alternating games over (β_A, β_B)."""
    return SweepSpec(
        sequences=('AB', 'ABB'),
        coin_a=coin.PRESET_COIN_A,
        coin_b=coin.PRESET_COIN_B,
        phi=_FIXED_PHI,
        initial=walk.InitialCoin.standard(),
        steps=PRESET_STEPS,
        axes=[
            SweepAxis('beta_a', 0.0, numpy.pi / 2, GRID_POINTS),
            SweepAxis('beta_b', 0.0, numpy.pi / 2, GRID_POINTS),
        ],
        record=FINAL_ONLY,
        name='beta-pair-scan',
    )


def _alpha_scan() -> SweepSpec:
    """Final E[x] of each single-coin walk over α at β = 45°, γ = 0°."""
    return SweepSpec(
        sequences=_SINGLE_COINS,
        coin_a=coin.PRESET_COIN_A.replace(beta=_BETA_45, gamma=0.0),
        coin_b=coin.PRESET_COIN_B.replace(beta=_BETA_45, gamma=0.0),
        phi=_FIXED_PHI,
        initial=walk.InitialCoin.standard(),
        steps=PRESET_STEPS,
        axes=[SweepAxis('alpha', 0.0, _TWO_PI, LINE_POINTS)],
        record=FINAL_ONLY,
        name='alpha-scan',
    )


def _gamma_scan() -> SweepSpec:
    """Final E[x] of each single-coin walk over γ at β = 45°, α = 0°."""
    return SweepSpec(
        sequences=_SINGLE_COINS,
        coin_a=coin.PRESET_COIN_A.replace(alpha=0.0, beta=_BETA_45),
        coin_b=coin.PRESET_COIN_B.replace(alpha=0.0, beta=_BETA_45),
        phi=_FIXED_PHI,
        initial=walk.InitialCoin.standard(),
        steps=PRESET_STEPS,
        axes=[SweepAxis('gamma', 0.0, _TWO_PI, LINE_POINTS)],
        record=FINAL_ONLY,
        name='gamma-scan',
    )


def _alpha_gamma_scan() -> SweepSpec:
    """Final E[x] of each single-coin walk over (α, γ) at β = 45°."""
    return SweepSpec(
        sequences=_SINGLE_COINS,
        coin_a=coin.PRESET_COIN_A.replace(beta=_BETA_45),
        coin_b=coin.PRESET_COIN_B.replace(beta=_BETA_45),
        phi=_FIXED_PHI,
        initial=walk.InitialCoin.standard(),
        steps=PRESET_STEPS,
        axes=[
            SweepAxis('alpha', 0.0, _TWO_PI, GRID_POINTS),
            SweepAxis('gamma', 0.0, _TWO_PI, GRID_POINTS),
        ],
        record=FINAL_ONLY,
        name='alpha-gamma-scan',
    )


PRESETS: typing.Dict[str, typing.Callable[[], SweepSpec]] = {
    'phase-scan': _phase_scan,
    'phase-lines': _phase_lines,
    'initial-state-scan': _initial_state_scan,
    'beta-scan': _beta_scan,
    'beta-pair-scan': _beta_pair_scan,
    'alpha-scan': _alpha_scan,
    'gamma-scan': _gamma_scan,
    'alpha-gamma-scan': _alpha_gamma_scan,
}
"""Factories for every named sweep, keyed by name."""


def preset(name: str) -> SweepSpec:
    """Create the fully specified sweep with the given name.

    Raises
    ------
    `~SweepValueError`
        There is no preset called `name`.
    """
    try:
        factory = PRESETS[name]
    except KeyError:
        raise SweepValueError(
            f"Unknown preset {name!r}; valid names are"
            f" {etc.join(PRESETS, quoted=True)}"
        ) from None
    return factory()


def describe_presets() -> str:
    """One line per preset, for help text."""
    return '\n'.join(
        f"{name}: {etc.doc2help(factory)}"
        for name, factory in PRESETS.items()
    )
