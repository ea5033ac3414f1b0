"""
Support for rendering sweep results as SVG figures.
"""

import matplotlib
matplotlib.use('Agg')
import matplotlib.figure
import matplotlib.pyplot as plt
import numpy

from .. import paths
from ._contour import contour_lines
from ._runner import SweepResult
from ._spec import FULL_SERIES


AXIS_LABELS = {
    'phi': 'φ (rad)',
    'theta': 'θ (rad)',
    'varphi': 'varphi (rad)',
    'alpha_a': 'α_A (rad)',
    'beta_a': 'β_A (rad)',
    'gamma_a': 'γ_A (rad)',
    'alpha_b': 'α_B (rad)',
    'beta_b': 'β_B (rad)',
    'gamma_b': 'γ_B (rad)',
    'alpha': 'α (rad)',
    'beta': 'β (rad)',
    'gamma': 'γ (rad)',
}

COLORMAP = 'bwr'
"""Blue for negative, white for zero, red for positive."""

PANEL_SIZE = (4.0, 3.6)

_STYLE = {
    'svg.hashsalt': 'parrondo-qwalk',
    'svg.fonttype': 'path',
}


def _limit(values: numpy.ndarray) -> float:
    """A symmetric color limit so that zero maps to the center color."""
    finite = numpy.abs(values[numpy.isfinite(values)])
    top = float(finite.max()) if finite.size else 0.0
    return top if top > 0.0 else 1.0


def _heatmap(ax, x, y, z, lim, xlabel, ylabel, title):
    """Draw one heatmap with ``z[i, j]`` at ``(x[i], y[j])``."""
    mesh = ax.pcolormesh(
        x,
        y,
        z.T,
        shading='nearest',
        cmap=COLORMAP,
        vmin=-lim,
        vmax=lim,
    )
    for line in contour_lines(x, y, z):
        ax.plot(line[:, 0], line[:, 1], color='black', linewidth=0.8)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    return mesh


def plot_result(result: SweepResult) -> matplotlib.figure.Figure:
    """Create a figure of E[x] for every panel of `result`."""
    spec = result.spec
    axes = spec.axes
    panels = len(spec.sequences)
    full = spec.record == FULL_SERIES
    if len(axes) == 1 and (not full or axes[0].is_explicit):
        return _line_figure(result)
    lim = _limit(result.data[..., 0])
    fig, grid = plt.subplots(
        1,
        panels,
        figsize=(PANEL_SIZE[0] * panels, PANEL_SIZE[1]),
        squeeze=False,
    )
    for panel, sequence in enumerate(spec.sequences):
        ax = grid[0, panel]
        values = result.quantity('expected_position', panel)
        if len(axes) == 1:
            steps = numpy.arange(1, spec.steps + 1)
            mesh = _heatmap(
                ax,
                numpy.array(axes[0]),
                steps,
                values,
                lim,
                AXIS_LABELS[axes[0].name],
                'step',
                sequence,
            )
        else:
            mesh = _heatmap(
                ax,
                numpy.array(axes[0]),
                numpy.array(axes[1]),
                values[..., -1],
                lim,
                AXIS_LABELS[axes[0].name],
                AXIS_LABELS[axes[1].name],
                sequence,
            )
    fig.colorbar(mesh, ax=grid[0, :].tolist(), label='E[x]')
    return fig


def _line_figure(result: SweepResult) -> matplotlib.figure.Figure:
    """Line plots for explicit-value series or one-axis final values."""
    spec = result.spec
    axis = spec.axes[0]
    if spec.record == FULL_SERIES:
        panels = len(spec.sequences)
        fig, grid = plt.subplots(
            1,
            panels,
            figsize=(PANEL_SIZE[0] * panels, PANEL_SIZE[1]),
            squeeze=False,
        )
        steps = numpy.arange(1, spec.steps + 1)
        for panel, sequence in enumerate(spec.sequences):
            ax = grid[0, panel]
            series = result.quantity('expected_position', panel)
            for i, value in enumerate(axis.values):
                ax.plot(steps, series[i], label=f"{axis.name}={value:.4g}")
            ax.set_xlabel('step')
            ax.set_ylabel('E[x]')
            ax.set_title(sequence)
        grid[0, -1].legend(fontsize='small')
        return fig
    fig, ax = plt.subplots(figsize=PANEL_SIZE)
    styles = ('-', '--', '-.', ':')
    for panel, sequence in enumerate(spec.sequences):
        ax.plot(
            axis.values,
            result.final('expected_position', panel),
            linestyle=styles[panel % len(styles)],
            label=sequence,
        )
    ax.axhline(0.0, color='gray', linewidth=0.5)
    ax.set_xlabel(AXIS_LABELS[axis.name])
    ax.set_ylabel(f"E[x] after {spec.steps} steps")
    ax.legend()
    return fig


def write_svg(result: SweepResult, path: paths.PathLike) -> None:
    """Render `result` and save it as an SVG file.

    Repeated calls with the same result produce identical bytes.
    """
    target = paths.fullpath(path)
    with matplotlib.rc_context(_STYLE):
        fig = plot_result(result)
        try:
            fig.savefig(target, format='svg', metadata={'Date': None})
        finally:
            plt.close(fig)
