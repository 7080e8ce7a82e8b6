#!/usr/bin/env python3
"""CSV and SVG output of experiment tables and box counting curves.

CSV files start with '# key: value' lines holding the resolved
configuration and are read back with pandas.read_csv(path, comment='#').
SVG files are written through matplotlib's Figure API with a fixed hash
salt and no date, so identical inputs give identical bytes.
"""
import logging

import matplotlib
from matplotlib.figure import Figure
import numpy as np
import pandas as pd

from fractal_nets.utils.exceptions import InvalidParameterError, OutputError

logger = logging.getLogger(__name__)

SVG_RC = {
    'svg.hashsalt': 'fractal-nets',
    'svg.fonttype': 'none',
    'path.simplify': False,
}


def _open(destination):
    try:
        return open(destination, 'w', newline='')
    except OSError as exc:
        raise OutputError(destination, exc.strerror or exc) from exc


def format_metadata(metadata):
    return ''.join('# %s: %s\n' % (key, value) for key, value in (metadata or {}).items())


def write_frame(frame, destination, metadata=None):
    """Write a DataFrame as CSV below '# key: value' metadata lines.

    Undefined values are written as empty fields.
    """

    stream = _open(destination)
    try:
        with stream:
            stream.write(format_metadata(metadata))
            frame.to_csv(stream, index=False, lineterminator='\n', na_rep='')
    except OSError as exc:
        raise OutputError(destination, exc.strerror or exc) from exc
    logger.info("Wrote %d rows to %s", len(frame), destination)


def emit_csv(table, destination):
    """Write a StatsTable with its metadata header and stable column order."""

    write_frame(table.frame, destination, table.metadata)


def read_csv(source):
    return pd.read_csv(source, comment='#')


def _save_svg(figure, destination, description=None):
    metadata = {'Date': None, 'Creator': 'fractal-nets'}
    if description:
        metadata['Description'] = description
    try:
        with matplotlib.rc_context(SVG_RC):
            figure.savefig(destination, format='svg', metadata=metadata)
    except OSError as exc:
        raise OutputError(destination, exc.strerror or exc) from exc
    logger.info("Wrote %s", destination)


def describe(metadata):
    return '; '.join('%s=%s' % (key, value) for key, value in (metadata or {}).items())


def loglog_figure(curves, labels):
    """Figure with one log-log line of N_B against l_B per curve."""

    if len(curves) == 0:
        raise InvalidParameterError("At least one curve is needed for a log-log plot.")
    if len(curves) != len(labels):
        raise InvalidParameterError("Got %d curves but %d labels." % (len(curves), len(labels)))
    figure = Figure(figsize=(6, 4.5))
    ax = figure.add_subplot()
    for k, (curve, label) in enumerate(zip(curves, labels)):
        ax.plot(curve.sizes, curve.counts, marker='o', markersize=3, label=str(label), gid='curve%d' % k)
    ax.set_xscale('log')
    ax.set_yscale('log')
    # (1, N) sits in the top left corner of the plot area
    sizes = np.concatenate([curve.sizes for curve in curves])
    counts = np.concatenate([curve.counts for curve in curves])
    if sizes.min() < sizes.max():
        ax.set_xlim(sizes.min(), sizes.max())
    if counts.min() < counts.max():
        ax.set_ylim(counts.min(), counts.max())
    ax.set_xlabel('box size $l_B$')
    ax.set_ylabel('box count $N_B$')
    ax.legend()
    figure.tight_layout()
    return figure


def emit_svg_loglog(curves, labels, destination, metadata=None):
    """Log-log plot of box counting curves, one polyline and legend entry each.

    Args:
        curves (list): NbCurve objects.
        labels (list): Legend labels, one per curve.
        destination (str): SVG file path.
        metadata (dict): Configuration echoed into the SVG description.
            Defaults to None.

    """

    _save_svg(loglog_figure(curves, labels), destination, describe(metadata))


def contour_grid(table, metric):
    """Mean of metric over the two sweep axes.

    Returns:
        list, list, numpy.ndarray: First axis values, second axis values and
        the matrix of means (rows follow the first axis).

    """

    if len(table.axes) != 2:
        raise InvalidParameterError("A heatmap needs a two-axis sweep, got %d axes." % len(table.axes))
    column = '%s_mean' % metric
    if column not in table.frame.columns:
        raise InvalidParameterError("Unknown metric '%s'." % metric)
    first, second = table.axes
    rows = list(dict.fromkeys(table.frame[first]))
    cols = list(dict.fromkeys(table.frame[second]))
    grid = np.full((len(rows), len(cols)), np.nan)
    for _, record in table.frame.iterrows():
        grid[rows.index(record[first]), cols.index(record[second])] = record[column]
    return rows, cols, grid


def contour_figure(table, metric):
    rows, cols, grid = contour_grid(table, metric)
    figure = Figure(figsize=(6, 4.5))
    ax = figure.add_subplot()
    finite = grid[np.isfinite(grid)]
    low, high = (float(finite.min()), float(finite.max())) if finite.size else (0.0, 1.0)
    mesh = ax.pcolormesh(np.arange(len(cols) + 1), np.arange(len(rows) + 1), np.ma.masked_invalid(grid),
                         cmap='viridis', vmin=low, vmax=high, shading='flat', edgecolors='face')
    ax.set_xticks(np.arange(len(cols)) + 0.5)
    ax.set_xticklabels([str(v) for v in cols])
    ax.set_yticks(np.arange(len(rows)) + 0.5)
    ax.set_yticklabels([str(v) for v in rows])
    ax.set_xlabel(table.axes[1])
    ax.set_ylabel(table.axes[0])
    colorbar = figure.colorbar(mesh, ax=ax)
    colorbar.set_label('mean %s' % metric)
    figure.tight_layout()
    return figure


def emit_svg_contour(table, metric, destination):
    """Heatmap of a metric mean over a two-axis sweep, with a colour scale.

    Raises:
        InvalidParameterError: for one-axis tables or unknown metrics.

    """

    _save_svg(contour_figure(table, metric), destination, describe(table.metadata))


def transition_figure(table):
    """Normalised diameter and average path length against ln(n), coloured by p."""

    frame = table.frame
    if len(frame) == 0:
        raise InvalidParameterError("The transition table is empty.")
    figure = Figure(figsize=(10, 4.5))
    axes = figure.subplots(1, 2)
    log_n = np.log(frame['n'].astype(np.float64))
    for ax, column, title in ((axes[0], 'norm_diameter_mean', 'diameter / ln n'),
                              (axes[1], 'norm_avg_path_length_mean', 'average path length / ln n')):
        points = ax.scatter(log_n, frame[column], c=frame['p'], cmap='plasma', vmin=0.0, vmax=1.0)
        ax.set_xlabel('ln n')
        ax.set_ylabel(title)
    colorbar = figure.colorbar(points, ax=list(axes))
    colorbar.set_label('p')
    return figure


def emit_svg_transition(table, destination):
    _save_svg(transition_figure(table), destination, describe(table.metadata))
