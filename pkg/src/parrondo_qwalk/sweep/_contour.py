"""
Support for level-set extraction from gridded sweep data.
"""

import typing

import numpy
import numpy.typing

from ._exceptions import SweepValueError
from ._runner import SweepResult


Polyline = numpy.typing.NDArray[numpy.float64]
"""An (n, 2) array of points in axis coordinates."""

EdgeKey = typing.Tuple[str, int, int]


# Corner k of cell (i, j) has grid index (i + di, j + dj).
_CORNERS = ((0, 0), (1, 0), (1, 1), (0, 1))

# Edge k joins corners k and (k + 1) % 4.
_EDGES = ((0, 1), (1, 2), (3, 2), (0, 3))

# Edge pairs crossed by the level set, keyed by the bit mask of corners above
# the level (corner k contributes 2**k). Saddle cases 5 and 10 are resolved
# separately.
_SEGMENTS = {
    1: ((3, 0),),
    2: ((0, 1),),
    3: ((3, 1),),
    4: ((1, 2),),
    6: ((0, 2),),
    7: ((3, 2),),
    8: ((2, 3),),
    9: ((0, 2),),
    11: ((1, 2),),
    12: ((1, 3),),
    13: ((0, 1),),
    14: ((3, 0),),
}

_SADDLES = {
    (5, True): ((0, 1), (2, 3)),
    (5, False): ((3, 0), (1, 2)),
    (10, True): ((3, 0), (1, 2)),
    (10, False): ((0, 1), (2, 3)),
}


def _edge_key(i: int, j: int, edge: int) -> EdgeKey:
    """A cell-independent name for one edge of cell (i, j)."""
    if edge == 0:
        return ('x', i, j)
    if edge == 1:
        return ('y', i + 1, j)
    if edge == 2:
        return ('x', i, j + 1)
    return ('y', i, j)


def contour_lines(
    x: numpy.typing.ArrayLike,
    y: numpy.typing.ArrayLike,
    z: numpy.typing.ArrayLike,
    level: float=0.0,
) -> typing.List[Polyline]:
    """Trace the level set ``z == level`` with marching squares.

    Parameters
    ----------
    x, y : array-like
        Axis coordinates of length n and m.
    z : array-like
        Values with shape (n, m), where ``z[i, j]`` belongs to ``(x[i], y[j])``.
    level : float, default=0.0
        The contour level. A grid value equal to the level counts as below it.

    Returns
    -------
    list of (k, 2) arrays
        Polylines in axis coordinates. Closed curves repeat their first point
        at the end. A grid that never crosses the level yields an empty list.
    """
    xs = numpy.asarray(x, dtype=float)
    ys = numpy.asarray(y, dtype=float)
    zs = numpy.asarray(z, dtype=float)
    if zs.shape != (len(xs), len(ys)):
        raise SweepValueError(
            f"Contour values have shape {zs.shape};"
            f" expected {(len(xs), len(ys))}"
        ) from None
    points: typing.Dict[EdgeKey, typing.Tuple[float, float]] = {}
    links: typing.Dict[EdgeKey, typing.List[EdgeKey]] = {}
    for i in range(len(xs) - 1):
        for j in range(len(ys) - 1):
            corners = [(i + di, j + dj) for di, dj in _CORNERS]
            values = [zs[c] for c in corners]
            if not all(numpy.isfinite(values)):
                continue
            mask = sum(1 << k for k, v in enumerate(values) if v > level)
            if mask in (0, 15):
                continue
            if mask in (5, 10):
                center = sum(values) / 4.0 > level
                pairs = _SADDLES[(mask, center)]
            else:
                pairs = _SEGMENTS[mask]
            for first, second in pairs:
                ends = []
                for edge in (first, second):
                    key = _edge_key(i, j, edge)
                    if key not in points:
                        p, q = (corners[k] for k in _EDGES[edge])
                        points[key] = _crossing(xs, ys, zs, p, q, level)
                    ends.append(key)
                links.setdefault(ends[0], []).append(ends[1])
                links.setdefault(ends[1], []).append(ends[0])
    return [
        numpy.array([points[key] for key in chain], dtype=float)
        for chain in _chains(links)
    ]


def _crossing(xs, ys, zs, p, q, level) -> typing.Tuple[float, float]:
    """Interpolate the level crossing between grid points p and q."""
    zp = zs[p]
    zq = zs[q]
    t = (level - zp) / (zq - zp)
    x = xs[p[0]] + t * (xs[q[0]] - xs[p[0]])
    y = ys[p[1]] + t * (ys[q[1]] - ys[p[1]])
    return float(x), float(y)


def _chains(
    links: typing.Dict[EdgeKey, typing.List[EdgeKey]],
) -> typing.List[typing.List[EdgeKey]]:
    """Join segments that share an edge into ordered chains."""
    remaining = {key: list(ends) for key, ends in links.items()}
    chains = []
    # Open curves start at an edge used by only one segment.
    starts = sorted(key for key, ends in remaining.items() if len(ends) == 1)
    for start in starts + sorted(remaining):
        if not remaining.get(start):
            continue
        chain = [start]
        current = start
        while remaining.get(current):
            following = remaining[current].pop(0)
            remaining[following].remove(current)
            chain.append(following)
            current = following
        chains.append(chain)
    return chains


def zero_contour(
    result: SweepResult,
    panel: int=0,
    quantity: str='expected_position',
) -> typing.List[Polyline]:
    """The zero level set of a final-step quantity over a two-axis sweep.

    Raises
    ------
    `~SweepValueError`
        The sweep does not have exactly two axes.
    """
    axes = result.spec.axes
    if len(axes) != 2:
        raise SweepValueError(
            f"A zero contour needs a two-axis sweep, got {len(axes)} axis"
        ) from None
    return contour_lines(
        axes[0].values,
        axes[1].values,
        result.final(quantity, panel),
        level=0.0,
    )
