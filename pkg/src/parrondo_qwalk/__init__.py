"""
Quantum-walk Parrondo games with an origin phase, plus the classical baseline.
"""

# read version from installed package
from importlib.metadata import version
__version__ = version("parrondo_qwalk")

from .coin import CoinParams, build_coin
from .walk import GameSpec, InitialCoin, evolve
from .observables import SeriesRecorder, observe
from .sweep import preset, run_sweep


__all__ = [
    "CoinParams",
    "build_coin",
    "GameSpec",
    "InitialCoin",
    "evolve",
    "SeriesRecorder",
    "observe",
    "preset",
    "run_sweep",
]
