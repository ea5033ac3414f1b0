"""
Support for evaluating sweeps over a pool of worker processes.
"""

import functools
import multiprocessing
import numbers
import os
import typing

import numpy
import numpy.typing

from .. import datafile
from .. import etc
from .. import observables
from .. import paths
from .. import walk
from ._exceptions import GridPointError, SweepValueError
from ._spec import FULL_SERIES, SweepSpec


QUANTITIES = ('expected_position', 'delta_p', 'entropy')
"""The recorded quantities, in storage and column order."""


GridTask = typing.Tuple[int, typing.Tuple[int, ...]]


def resolve_threads(threads: typing.Optional[int]) -> int:
    """Convert a requested worker count to a positive number.

    Zero means one worker per available CPU and ``None`` means one worker.
    """
    if threads is None:
        return 1
    if not isinstance(threads, numbers.Integral) or threads < 0:
        raise SweepValueError(
            f"Worker count must be a nonnegative integer, got {threads!r}"
        ) from None
    if threads == 0:
        return os.cpu_count() or 1
    return int(threads)


def evaluate_point(
    spec: SweepSpec,
    task: GridTask,
) -> typing.Tuple[int, typing.Tuple[int, ...], numpy.typing.NDArray]:
    """Run the walk at one grid point and collect its observables.

    The returned array has one row per recorded step and one column per
    entry in `QUANTITIES`.
    """
    panel, index = task
    try:
        game, initial = spec.point(panel, index)
        if spec.record == FULL_SERIES:
            observations = []
            walk.evolve(
                game,
                initial,
                spec.steps,
                observer=lambda s: observations.append(observables.observe(s)),
            )
        else:
            final = walk.evolve(game, initial, spec.steps)
            observations = [observables.observe(final)]
    except (
        walk.WalkValueError,
        walk.CapacityError,
        observables.NumericalValidityError,
    ) as err:
        raise GridPointError(
            str(err),
            panel=panel,
            index=index,
            values=spec.values_at(index),
        ) from err
    values = numpy.array([tuple(o)[1:] for o in observations], dtype=float)
    return panel, tuple(index), values


@etc.autostr
class SweepResult:
    """The observables recorded at every grid point of every panel."""

    def __init__(
        self,
        spec: SweepSpec,
        data: numpy.typing.ArrayLike,
    ) -> None:
        array = numpy.asarray(data, dtype=float)
        expected = (
            len(spec.sequences),
            *spec.shape,
            spec.recorded_steps,
            len(QUANTITIES),
        )
        if array.shape != expected:
            raise SweepValueError(
                f"Sweep data has shape {array.shape}; expected {expected}"
            ) from None
        array.flags.writeable = False
        self._spec = spec
        self._data = array

    @property
    def spec(self) -> SweepSpec:
        """The sweep that produced this result."""
        return self._spec

    @property
    def data(self) -> numpy.typing.NDArray[numpy.float64]:
        """Array indexed by (panel, axis index..., recorded step, quantity)."""
        return self._data

    @property
    def columns(self) -> typing.Tuple[str, ...]:
        """The column names of the long-format table."""
        names = ['sequence', *(axis.name for axis in self._spec.axes)]
        if self._spec.record == FULL_SERIES:
            names.append('step')
        return (*names, *QUANTITIES)

    def quantity(
        self,
        name: str,
        panel: int=0,
    ) -> numpy.typing.NDArray[numpy.float64]:
        """One recorded quantity of one panel, indexed by (axes..., step)."""
        try:
            q = QUANTITIES.index(name)
        except ValueError:
            raise SweepValueError(
                f"Unknown quantity {name!r}; expected"
                f" {etc.join(QUANTITIES, 'or', quoted=True)}"
            ) from None
        return self._data[panel, ..., q]

    def final(
        self,
        name: str='expected_position',
        panel: int=0,
    ) -> numpy.typing.NDArray[numpy.float64]:
        """One quantity of one panel after the last step, indexed by axes."""
        return self.quantity(name, panel)[..., -1]

    def rows(self) -> typing.Iterator[typing.Tuple[typing.Any, ...]]:
        """Iterate over table rows in (panel, axis indices, step) order."""
        spec = self._spec
        full = spec.record == FULL_SERIES
        for panel, sequence in enumerate(spec.sequences):
            for index in spec.grid():
                values = spec.values_at(index)
                block = self._data[(panel, *index)]
                for k, quantities in enumerate(block):
                    step = (k + 1,) if full else ()
                    yield (
                        sequence,
                        *values,
                        *step,
                        *(float(v) for v in quantities),
                    )

    def __len__(self) -> int:
        """The number of table rows."""
        return int(numpy.prod(self._data.shape[:-1]))

    def __str__(self) -> str:
        """A simplified representation of this object."""
        return f"{self._spec}, rows={len(self)}"


def run_sweep(spec: SweepSpec, threads: typing.Optional[int]=1) -> SweepResult:
    """Evaluate every grid point of every panel.

    Results are written into a preallocated table by grid index, so the
    output is identical for any worker count.

    Parameters
    ----------
    spec : `~SweepSpec`
        The sweep to run.
    threads : int, default=1
        The number of worker processes. Zero uses every available CPU.

    Raises
    ------
    `~GridPointError`
        The walk failed at some grid point.
    """
    workers = resolve_threads(threads)
    tasks = [
        (panel, index)
        for panel in range(len(spec.sequences))
        for index in spec.grid()
    ]
    data = numpy.full(
        (
            len(spec.sequences),
            *spec.shape,
            spec.recorded_steps,
            len(QUANTITIES),
        ),
        numpy.nan,
    )
    evaluate = functools.partial(evaluate_point, spec)
    if workers == 1 or len(tasks) == 1:
        for task in tasks:
            panel, index, values = evaluate(task)
            data[(panel, *index)] = values
    else:
        chunksize = max(1, len(tasks) // (4 * workers))
        with multiprocessing.Pool(processes=workers) as pool:
            for panel, index, values in pool.imap_unordered(
                evaluate,
                tasks,
                chunksize=chunksize,
            ):
                data[(panel, *index)] = values
    return SweepResult(spec, data)


def write_csv(
    result: SweepResult,
    path: paths.PathLike,
    metadata: datafile.Metadata=(),
) -> int:
    """Write `result` as a long-format CSV table.

    The sweep's own description comes first in the metadata, followed by
    `metadata`.
    """
    return datafile.write_csv(
        path,
        result.columns,
        result.rows(),
        metadata=[*result.spec.metadata(), *metadata],
    )
