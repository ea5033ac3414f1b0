import json
import pathlib
import typing

import numpy
import pytest

from parrondo_qwalk import coin
from parrondo_qwalk import walk


GOLDEN_DIR = pathlib.Path(__file__).parent / 'golden'


@pytest.fixture
def coin_a() -> coin.CoinParams:
    """Coin A of the phase experiments."""
    return coin.PRESET_COIN_A


@pytest.fixture
def coin_b() -> coin.CoinParams:
    """Coin B of the phase experiments."""
    return coin.PRESET_COIN_B


@pytest.fixture
def standard() -> walk.InitialCoin:
    """The balanced initial coin (|0⟩ − i|1⟩)/√2."""
    return walk.InitialCoin.standard()


@pytest.fixture
def identity() -> coin.CoinParams:
    """The coin that leaves the coin state alone."""
    return coin.CoinParams(0.0, 0.0, 0.0)


@pytest.fixture
def rng() -> numpy.random.Generator:
    """A seeded random generator for property checks."""
    return numpy.random.default_rng(20240917)


@pytest.fixture
def rootpath():
    """The top-level repository directory."""
    return pathlib.Path(__file__).parent.parent


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption(
        '--record-golden',
        action='store_true',
        default=False,
        help="store missing golden values in tests/golden/ and skip",
    )


@pytest.fixture
def golden(request: pytest.FixtureRequest):
    """Compare a value to the one stored by its first verified run.

    A missing value fails the calling test. With ``--record-golden``, the
    value is stored instead and the test is skipped, so the new file must be
    checked by hand before it is committed.
    """
    record = request.config.getoption('--record-golden')
    def check(name: str, value: typing.Any) -> typing.Any:
        """Return the stored value, or record `value` (called if callable)."""
        path = GOLDEN_DIR / f"{name}.json"
        if path.exists():
            with path.open('r') as fp:
                return json.load(fp)
        if not record:
            pytest.fail(
                f"Missing golden value {name!r} at {path}"
                "; run with --record-golden to store it"
            )
        if callable(value):
            value = value()
        GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
        with path.open('w') as fp:
            json.dump(value, fp, indent=2)
            fp.write('\n')
        pytest.skip(f"Recorded golden value {name!r}; verify {path}")
    return check
