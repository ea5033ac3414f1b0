import numpy
import pytest

from parrondo_qwalk import sweep


def test_uniform_axis():
    """Grid values follow start + i·(stop − start)/(points − 1)."""
    axis = sweep.SweepAxis('phi', 0.0, 2 * numpy.pi, 128)
    assert len(axis) == 128
    assert axis.values[0] == 0.0
    assert axis.values[-1] == 2 * numpy.pi
    for i in (1, 17, 64, 126):
        assert axis.values[i] == 0.0 + i * (2 * numpy.pi) / 127
    assert numpy.array(axis).shape == (128,)
    assert not axis.is_explicit


def test_closed_range_endpoint():
    """The last point is the stop value itself."""
    for points in range(2, 100):
        assert sweep.grid_value(0.0, numpy.pi, points, points - 1) == numpy.pi
    axis = sweep.SweepAxis('theta', 0.0, numpy.pi, 64)
    assert max(axis.values) <= numpy.pi


def test_degree_values():
    """Axis bounds accept the degree suffix."""
    axis = sweep.SweepAxis('beta', '0d', '90d', 3)
    assert axis.values == pytest.approx((0.0, numpy.pi / 4, numpy.pi / 2))


def test_explicit_axis():
    """Explicit axes keep their values in the given order."""
    axis = sweep.SweepAxis.explicit('phi', [numpy.pi, 0.0, 1.0])
    assert axis.is_explicit
    assert axis.values == (numpy.pi, 0.0, 1.0)
    assert axis.start == 0.0 and axis.stop == numpy.pi
    assert axis.points == 3
    single = sweep.SweepAxis.explicit('theta', [0.5])
    assert single.values == (0.5,)
    assert single.describe() == 'theta in {0.5}'


def test_axis_errors():
    """Invalid axes are rejected."""
    with pytest.raises(sweep.SweepValueError):
        sweep.SweepAxis('delta', 0.0, 1.0, 3)
    with pytest.raises(sweep.SweepValueError):
        sweep.SweepAxis('phi', 1.0, 1.0, 3)
    with pytest.raises(sweep.SweepValueError):
        sweep.SweepAxis('phi', 0.0, 1.0, 1)
    with pytest.raises(sweep.SweepValueError):
        sweep.SweepAxis('phi', 0.0, 'x', 3)
    with pytest.raises(sweep.SweepValueError):
        sweep.SweepAxis.explicit('phi', [])


def test_axis_description():
    """Descriptions round-trip the grid definition."""
    axis = sweep.SweepAxis('phi', 0.0, 1.5, 4)
    assert axis.describe() == 'phi in [0.0, 1.5], 4 points'
    assert axis == sweep.SweepAxis('phi', 0.0, 1.5, 4)
    assert axis != sweep.SweepAxis('phi', 0.0, 1.5, 5)
