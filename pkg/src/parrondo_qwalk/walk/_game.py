"""
Support for two-coin games played in a repeating sequence.
"""

import numbers
import re
import typing

import numpy
from typing_extensions import Self

from .. import coin
from .. import etc
from ._exceptions import WalkValueError


_SEQUENCE = re.compile(r'\A[AB]+\Z')


def validate_sequence(sequence: str) -> str:
    """Return `sequence` if it is a nonempty pattern over {A, B}."""
    if not isinstance(sequence, str) or not _SEQUENCE.match(sequence):
        raise WalkValueError(
            f"A game sequence must be a nonempty string of 'A' and 'B',"
            f" got {sequence!r}"
        ) from None
    return sequence


def coin_for_step(sequence: str, t: int) -> str:
    """The coin label played at step `t`.

    Step 0 plays the first letter and the pattern repeats cyclically, so
    ``coin_for_step('ABB', 3) == 'A'``.
    """
    if not sequence:
        raise WalkValueError("Cannot index an empty sequence") from None
    if not isinstance(t, numbers.Integral) or t < 0:
        raise WalkValueError(
            f"Step index must be a nonnegative integer, got {t!r}"
        ) from None
    return sequence[t % len(sequence)]


@etc.autostr
class GameSpec:
    """Two coins, their play sequence, and the phase applied at the origin."""

    def __init__(
        self,
        coin_a: coin.CoinParams,
        coin_b: coin.CoinParams,
        sequence: str,
        origin_phase: numbers.Real,
    ) -> None:
        for name, this in (('coin_a', coin_a), ('coin_b', coin_b)):
            if not isinstance(this, coin.CoinParams):
                raise WalkValueError(
                    f"{name} must be coin parameters, got {type(this)}"
                ) from None
        phi = float(origin_phase)
        if not numpy.isfinite(phi):
            raise WalkValueError(
                f"Origin phase must be finite, got {origin_phase}"
            ) from None
        self._coin_a = coin_a
        self._coin_b = coin_b
        self._sequence = validate_sequence(sequence)
        self._origin_phase = phi
        self._matrices = None
        self._origin_matrices = None

    @property
    def coin_a(self) -> coin.CoinParams:
        """The angles of coin A."""
        return self._coin_a

    @property
    def coin_b(self) -> coin.CoinParams:
        """The angles of coin B."""
        return self._coin_b

    @property
    def sequence(self) -> str:
        """The repeating pattern of coin labels."""
        return self._sequence

    @property
    def origin_phase(self) -> float:
        """The phase φ applied to the coin at x = 0."""
        return self._origin_phase

    @property
    def matrices(self) -> typing.Dict[str, coin.CoinMatrix]:
        """The coin matrices keyed by label."""
        if self._matrices is None:
            self._matrices = {
                'A': coin.build_coin(self._coin_a),
                'B': coin.build_coin(self._coin_b),
            }
        return self._matrices

    @property
    def origin_matrices(self) -> typing.Dict[str, coin.CoinMatrix]:
        """The origin-site coin matrices e^{iφ}·C keyed by label."""
        if self._origin_matrices is None:
            self._origin_matrices = {
                label: coin.apply_origin_phase(matrix, self._origin_phase)
                for label, matrix in self.matrices.items()
            }
        return self._origin_matrices

    def coin_at(self, t: int) -> coin.CoinMatrix:
        """The coin matrix played at step `t`."""
        return self.matrices[coin_for_step(self._sequence, t)]

    def replace(self, **changes) -> Self:
        """Create a copy with some fields replaced."""
        current = {
            'coin_a': self._coin_a,
            'coin_b': self._coin_b,
            'sequence': self._sequence,
            'origin_phase': self._origin_phase,
        }
        unknown = set(changes) - set(current)
        if unknown:
            raise WalkValueError(
                f"Unknown game field(s): {etc.join(sorted(unknown))}"
            ) from None
        current.update(changes)
        return type(self)(**current)

    def __str__(self) -> str:
        """A simplified representation of this object."""
        return (
            f"sequence={self._sequence!r}, phi={self._origin_phase},"
            f" coin_a=({self._coin_a}), coin_b=({self._coin_b})"
        )
