#!/usr/bin/env python3
"""Replication stability and parameter sweeps.

Replication i of sweep cell c is generated with seed
master_seed + c * (n_reps + 1) + i (mod 2^64), so a plain run of
replications equals cell 0 of any sweep. Replications may run in worker
processes; results are merged in task order, so tables do not depend on
the number of workers.
"""
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from fractal_nets.analysis.metrics import METRIC_COLUMNS, metric_suite
from fractal_nets.models.model_spec import MODEL_FIELDS, ModelSpec
from fractal_nets.utils.exceptions import InvalidParameterError
from fractal_nets.utils.utils import check_int, check_seed, coerce_dims, format_dims, replication_seed
from fractal_nets.wrappers.exception_handling import ExceptionHandling

logger = logging.getLogger(__name__)

DEFAULT_REPLICATIONS = 30
STATISTICS = ('mean', 'std', 'min', 'max', 'cv')
SCALE_NOTE = 'desk-scale sizes; the network sizes and replication counts behind the published plots are not reported'


@dataclass
class StatsTable:
    """Aggregated statistics, one row per parameter combination.

    Attributes:
        frame (pandas.DataFrame): Axis columns, n_reps, then '<metric>_<stat>'
            columns for every metric and statistic.
        axes (tuple): Names of the swept parameters.
        metadata (dict): Resolved configuration written into output headers.
        curves (dict): Representative NbCurve per row label, if any.

    """
    frame: pd.DataFrame
    axes: tuple = ()
    metadata: dict = field(default_factory=dict)
    curves: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.frame)

    def column(self, metric, statistic='mean'):
        return self.frame['%s_%s' % (metric, statistic)]


@dataclass(frozen=True)
class SweepSpec:
    """A model template and the parameters swept over it.

    Args:
        model (ModelSpec): Template; swept fields are overridden per cell.
        axes (sequence): One or two (name, values) pairs.
        n_reps (int): Replications per cell. Defaults to 30.
        master_seed (int): Base seed. Defaults to 0.

    """
    model: ModelSpec
    axes: tuple
    n_reps: int = DEFAULT_REPLICATIONS
    master_seed: int = 0

    def __post_init__(self):
        axes = tuple((str(name), tuple(values)) for name, values in self.axes)
        if not 1 <= len(axes) <= 2:
            raise InvalidParameterError("A sweep takes one or two axes, got %d." % len(axes))
        allowed = MODEL_FIELDS[self.model.kind]
        names = [name for name, _ in axes]
        if len(set(names)) != len(names):
            raise InvalidParameterError("Sweep axes must be distinct, got %s." % ', '.join(names))
        for name, values in axes:
            if name not in allowed:
                raise InvalidParameterError("%s is not a parameter of model %s (expected one of %s)."
                                            % (name, self.model.kind, ', '.join(allowed)))
            if len(values) == 0:
                raise InvalidParameterError("Sweep axis %s has no values." % name)
        axes = tuple((name, tuple(tuple(coerce_dims(v)) for v in values) if name == 'dims' else values)
                     for name, values in axes)
        object.__setattr__(self, 'axes', axes)
        object.__setattr__(self, 'n_reps', check_int(self.n_reps, 'n_reps', 1))
        object.__setattr__(self, 'master_seed', check_seed(self.master_seed))
        # range errors in axis values surface here, not in a worker
        self.cells()

    @property
    def axis_names(self):
        return tuple(name for name, _ in self.axes)

    def cells(self):
        """ModelSpec of every cell, in row-major order of the axes."""

        values = [values for _, values in self.axes]
        return [self.model.with_params(**dict(zip(self.axis_names, combination)))
                for combination in itertools.product(*values)]


def run_parallel(func, tasks, jobs=1):
    """Map func over tasks, in worker processes when jobs > 1, keeping task order."""

    jobs = check_int(jobs, 'jobs', 1)
    if jobs == 1 or len(tasks) < 2:
        return [func(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(func, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


def _measure(spec, seed):
    return metric_suite(spec.with_params(seed=seed).generate()).as_dict()


def _replicate(task):
    spec, seed = task
    return ExceptionHandling(_measure)(seed, spec=spec)


def summarize(values):
    """Mean, population std, min, max and coefficient of variation.

    None counts as NaN and propagates to every statistic.
    """

    values = np.array([np.nan if v is None else v for v in values], dtype=np.float64)
    mean = float(np.mean(values))
    std = float(np.std(values, ddof=0))
    cv = std / abs(mean) if mean != 0 else np.nan
    return {'mean': mean, 'std': std, 'min': float(np.min(values)), 'max': float(np.max(values)), 'cv': cv}


def aggregate(records, columns):
    """One row of '<column>_<stat>' entries from per-replication dicts."""

    row = {}
    for column in columns:
        for statistic, value in summarize([record[column] for record in records]).items():
            row['%s_%s' % (column, statistic)] = value
    return row


def stats_columns(columns):
    return ['%s_%s' % (column, statistic) for column in columns for statistic in STATISTICS]


def axis_value(name, value):
    return format_dims(value) if name == 'dims' else value


def _sweep_frame(sweep, jobs):
    cells = sweep.cells()
    tasks = [(cell, replication_seed(sweep.master_seed, c, i, sweep.n_reps))
             for c, cell in enumerate(cells) for i in range(sweep.n_reps)]
    logger.info("Running %d cells x %d replications of %s", len(cells), sweep.n_reps, sweep.model.kind)
    records = run_parallel(_replicate, tasks, jobs)
    rows = []
    for c, cell in enumerate(cells):
        row = {name: axis_value(name, getattr(cell, name)) for name in sweep.axis_names}
        row['n_reps'] = sweep.n_reps
        row.update(aggregate(records[c * sweep.n_reps:(c + 1) * sweep.n_reps], METRIC_COLUMNS))
        rows.append(row)
        logger.info("Cell %d of %d done: %s", c + 1, len(cells), cell.header())
    columns = list(sweep.axis_names) + ['n_reps'] + stats_columns(METRIC_COLUMNS)
    return pd.DataFrame(rows, columns=columns)


def _metadata(model, n_reps, master_seed, axes=None):
    metadata = dict(model.header())
    metadata.pop('seed', None)
    for name, values in axes or ():
        metadata[name] = ','.join(str(axis_value(name, v)) for v in values)
    metadata['n_reps'] = n_reps
    metadata['master_seed'] = master_seed
    return metadata


def run_replications(spec, n_reps=DEFAULT_REPLICATIONS, master_seed=0, jobs=1):
    """Metric statistics over n_reps realizations of one model setting.

    Args:
        spec (ModelSpec): Model and parameters; its seed is ignored.
        n_reps (int): Number of realizations. Defaults to 30.
        master_seed (int): Replication i uses master_seed + i. Defaults to 0.
        jobs (int): Worker processes. Defaults to 1.

    Returns:
        StatsTable: A single row without axis columns.

    Raises:
        GenerationError: with the seed of the first failing replication.

    """

    n_reps = check_int(n_reps, 'n_reps', 1)
    master_seed = check_seed(master_seed)
    tasks = [(spec, replication_seed(master_seed, 0, i, n_reps)) for i in range(n_reps)]
    records = run_parallel(_replicate, tasks, jobs)
    row = {'n_reps': n_reps}
    row.update(aggregate(records, METRIC_COLUMNS))
    frame = pd.DataFrame([row], columns=['n_reps'] + stats_columns(METRIC_COLUMNS))
    return StatsTable(frame=frame, metadata=_metadata(spec, n_reps, master_seed))


def sweep_grid(sweep, jobs=1):
    """Run replications on every cell of the Cartesian product of the axes.

    Args:
        sweep (SweepSpec): Template, axes, replications and seed.
        jobs (int): Worker processes. Defaults to 1.

    Returns:
        StatsTable: One row per cell.

    """

    metadata = _metadata(sweep.model, sweep.n_reps, sweep.master_seed, sweep.axes)
    metadata['scale_note'] = SCALE_NOTE
    return StatsTable(frame=_sweep_frame(sweep, jobs), axes=sweep.axis_names, metadata=metadata)
