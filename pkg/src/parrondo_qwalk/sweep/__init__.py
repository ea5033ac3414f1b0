"""
Deterministic parameter sweeps over the quantum-walk game.
"""

from ._exceptions import (
    GridPointError,
    SweepValueError,
)
from ._axes import (
    AXIS_NAMES,
    SweepAxis,
    grid_value,
)
from ._spec import (
    FINAL_ONLY,
    FULL_SERIES,
    RECORD_MODES,
    SweepSpec,
)
from ._presets import (
    GRID_POINTS,
    LINE_POINTS,
    PRESETS,
    describe_presets,
    preset,
)
from ._runner import (
    QUANTITIES,
    SweepResult,
    evaluate_point,
    resolve_threads,
    run_sweep,
    write_csv,
)
from ._contour import (
    contour_lines,
    zero_contour,
)
from ._figures import (
    plot_result,
    write_svg,
)


__all__ = [
    'GridPointError',
    'SweepValueError',
    'AXIS_NAMES',
    'SweepAxis',
    'grid_value',
    'FINAL_ONLY',
    'FULL_SERIES',
    'RECORD_MODES',
    'SweepSpec',
    'GRID_POINTS',
    'LINE_POINTS',
    'PRESETS',
    'describe_presets',
    'preset',
    'QUANTITIES',
    'SweepResult',
    'evaluate_point',
    'resolve_threads',
    'run_sweep',
    'write_csv',
    'contour_lines',
    'zero_contour',
    'plot_result',
    'write_svg',
]
