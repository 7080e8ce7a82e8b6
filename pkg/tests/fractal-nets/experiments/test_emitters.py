#!/usr/bin/env python3
import math
import re

import numpy as np
import pandas as pd
import pytest

from fractal_nets.analysis.boxcover import NbCurve
from fractal_nets.experiments.emitters import contour_figure, contour_grid, emit_csv, emit_svg_contour, \
    emit_svg_loglog, emit_svg_transition, loglog_figure, read_csv, transition_figure, write_frame
from fractal_nets.experiments.replications import StatsTable
from fractal_nets.utils.exceptions import InvalidParameterError, OutputError

PATH_CURVE = NbCurve.from_points([(1, 8), (2, 4), (3, 3), (4, 2), (5, 2), (6, 2), (7, 2), (8, 1)])
SHORT_CURVE = NbCurve.from_points([(1, 5), (2, 2), (3, 1)])


def sweep_table(values=None):
    m_values, y_values = [1, 2, 3], [0.0, 0.25, 0.5, 0.75, 1.0]
    rows = [{'m': m, 'Y': Y} for m in m_values for Y in y_values]
    frame = pd.DataFrame(rows)
    frame['n_reps'] = 2
    frame['assortativity_mean'] = values if values is not None else -0.1 * frame['m'] - frame['Y']
    return StatsTable(frame=frame, axes=('m', 'Y'), metadata={'model': 'rbfm', 't': 3})


def line_paths(svg, gid):
    """Path data of the line with the given gid."""

    group = re.search(r'<g id="%s">(.*?)</g>' % gid, svg, re.S).group(1)
    return re.findall(r'<path d="([^"]*)"', group)


### CSV ###
@pytest.mark.commit
def test_empty_table_is_header_only(tmp_path):
    path = tmp_path / 'empty.csv'
    emit_csv(StatsTable(frame=pd.DataFrame(columns=['m', 'n_reps', 'n_mean'])), str(path))
    assert path.read_text() == 'm,n_reps,n_mean\n'


@pytest.mark.commit
def test_one_row_table_is_two_lines(tmp_path):
    path = tmp_path / 'row.csv'
    emit_csv(StatsTable(frame=pd.DataFrame([{'m': 2, 'n_mean': 230.0}])), str(path))
    assert path.read_text().splitlines() == ['m,n_mean', '2,230.0']


@pytest.mark.commit
def test_metadata_header_and_read_back(tmp_path):
    path = tmp_path / 'table.csv'
    frame = pd.DataFrame({'p': [0.1, 0.7], 'x_mean': [1 / 3, math.pi], 'assortativity_mean': [None, -0.25]})
    emit_csv(StatsTable(frame=frame, metadata={'model': 'lswtm', 'dims': '8x8'}), str(path))
    lines = path.read_text().splitlines()
    assert lines[:2] == ['# model: lswtm', '# dims: 8x8']
    assert lines[2] == 'p,x_mean,assortativity_mean'
    # undefined values are empty fields
    assert lines[3].endswith(',')
    back = read_csv(str(path))
    assert list(back.columns) == list(frame.columns)
    assert np.allclose(back['x_mean'], frame['x_mean'], rtol=0, atol=1e-12)
    assert math.isnan(back.loc[0, 'assortativity_mean'])
    assert back.loc[1, 'assortativity_mean'] == -0.25


@pytest.mark.commit
def test_write_frame_is_byte_stable(tmp_path):
    frame = pd.DataFrame({'l_b': [1, 2, 3], 'n_b': [9, 3, 1]})
    first, second = tmp_path / 'a.csv', tmp_path / 'b.csv'
    write_frame(frame, str(first), {'seed': 4})
    write_frame(frame, str(second), {'seed': 4})
    assert first.read_bytes() == second.read_bytes()


@pytest.mark.commit
def test_unwritable_destination(tmp_path):
    with pytest.raises(OutputError) as error:
        write_frame(pd.DataFrame({'a': [1]}), str(tmp_path / 'missing' / 'out.csv'))
    assert 'missing' in str(error.value)


### log-log SVG ###
@pytest.mark.commit
def test_one_curve_one_polyline(tmp_path):
    path = tmp_path / 'curve.svg'
    emit_svg_loglog([PATH_CURVE], ['path 8'], str(path))
    svg = path.read_text()
    assert svg.startswith('<?xml')
    data = line_paths(svg, 'curve0')[0]
    assert data.count('M') == 1
    assert data.count('L') == 7
    assert 'curve1' not in svg
    assert 'path 8' in svg


@pytest.mark.commit
def test_two_curves_two_legend_entries():
    figure = loglog_figure([PATH_CURVE, SHORT_CURVE], ['first', 'second'])
    ax = figure.axes[0]
    assert len(ax.get_lines()) == 2
    assert [text.get_text() for text in ax.get_legend().get_texts()] == ['first', 'second']
    assert ax.get_xscale() == 'log' and ax.get_yscale() == 'log'


@pytest.mark.commit
def test_first_point_is_top_left_corner():
    ax = loglog_figure([PATH_CURVE], ['path 8']).axes[0]
    x, y = ax.transData.transform((1, 8))
    assert abs(x - ax.bbox.x0) < 1e-6
    assert abs(y - ax.bbox.y1) < 1e-6


@pytest.mark.commit
def test_svg_is_byte_stable(tmp_path):
    first, second = tmp_path / 'a.svg', tmp_path / 'b.svg'
    emit_svg_loglog([PATH_CURVE], ['x'], str(first), {'seed': 1})
    emit_svg_loglog([PATH_CURVE], ['x'], str(second), {'seed': 1})
    assert first.read_bytes() == second.read_bytes()


@pytest.mark.commit
def test_loglog_invalid(tmp_path):
    with pytest.raises(InvalidParameterError):
        emit_svg_loglog([], [], str(tmp_path / 'none.svg'))
    with pytest.raises(InvalidParameterError):
        loglog_figure([PATH_CURVE], ['a', 'b'])


### heatmap SVG ###
@pytest.mark.commit
def test_contour_grid_layout():
    rows, cols, grid = contour_grid(sweep_table(), 'assortativity')
    assert rows == [1, 2, 3]
    assert cols == [0.0, 0.25, 0.5, 0.75, 1.0]
    assert grid.shape == (3, 5)
    assert grid[2, 4] == -0.1 * 3 - 1.0


@pytest.mark.commit
def test_heatmap_has_fifteen_cells_and_scale_endpoints():
    table = sweep_table()
    mesh = contour_figure(table, 'assortativity').axes[0].collections[0]
    assert mesh.get_array().size == 15
    values = table.frame['assortativity_mean']
    assert mesh.norm.vmin == values.min()
    assert mesh.norm.vmax == values.max()


@pytest.mark.commit
def test_constant_metric_is_single_colour():
    mesh = contour_figure(sweep_table(values=[0.5] * 15), 'assortativity').axes[0].collections[0]
    colours = mesh.to_rgba(mesh.get_array())
    assert len(np.unique(colours, axis=0)) == 1


@pytest.mark.commit
def test_emit_svg_contour(tmp_path):
    path = tmp_path / 'heatmap.svg'
    emit_svg_contour(sweep_table(), 'assortativity', str(path))
    assert '<svg' in path.read_text()


@pytest.mark.commit
def test_heatmap_needs_two_axes_and_known_metric(tmp_path):
    table = sweep_table()
    one_axis = StatsTable(frame=table.frame, axes=('m',))
    with pytest.raises(InvalidParameterError):
        emit_svg_contour(one_axis, 'assortativity', str(tmp_path / 'x.svg'))
    with pytest.raises(InvalidParameterError):
        contour_grid(table, 'betweenness')


### transition SVG ###
@pytest.mark.commit
def test_transition_figure(tmp_path):
    frame = pd.DataFrame({'dims': ['8x8', '8x8', '16x16'], 'p': [0.0, 1.0, 0.0], 'n': [64, 64, 256],
                          'norm_diameter_mean': [3.4, 1.5, 5.4], 'norm_avg_path_length_mean': [1.3, 0.8, 1.9]})
    table = StatsTable(frame=frame, axes=('dims', 'p'))
    figure = transition_figure(table)
    assert len(figure.axes) == 3
    path = tmp_path / 'transition.svg'
    emit_svg_transition(table, str(path))
    assert path.stat().st_size > 0
    with pytest.raises(InvalidParameterError):
        transition_figure(StatsTable(frame=frame.iloc[:0]))
