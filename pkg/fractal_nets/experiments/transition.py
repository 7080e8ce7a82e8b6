#!/usr/bin/env python3
"""Fractal to small-world transition of the lattice model."""
import math
import logging
from collections import Counter

import numpy as np
import pandas as pd

from fractal_nets.analysis.boxcover import DEFAULT_ORDERINGS, DEFAULT_R2_CUTOFF, FRACTAL, MIXED, classify_fractality, \
    nb_curve
from fractal_nets.experiments.replications import SCALE_NOTE, StatsTable, aggregate, run_parallel, stats_columns
from fractal_nets.models.model_spec import ModelSpec
from fractal_nets.utils.exceptions import InsufficientDataError, InvalidParameterError
from fractal_nets.utils.graph import distance_matrix, path_statistics
from fractal_nets.utils.utils import check_int, check_probability, check_seed, format_dims, replication_seed
from fractal_nets.wrappers.exception_handling import ExceptionHandling

logger = logging.getLogger(__name__)

TRANSITION_COLUMNS = ('norm_diameter', 'norm_avg_path_length', 'd_b', 'r2_power', 'r2_exp')


def curve_label(dims, p):
    return '%s p=%s' % (format_dims(dims), p)


def _measure(spec, seed, n_orderings, r2_cutoff):
    g = spec.with_params(seed=seed).generate()
    distances = distance_matrix(g)
    diameter, apl = path_statistics(g, distances)
    curve = nb_curve(g, seed=seed, n_orderings=n_orderings, distances=distances)
    log_n = math.log(g.node_count)
    record = {
        'n': g.node_count,
        'norm_diameter': diameter / log_n,
        'norm_avg_path_length': apl / log_n,
        'curve': curve,
    }
    try:
        report = classify_fractality(curve, r2_cutoff=r2_cutoff)
    except InsufficientDataError:
        # diameter below 3, too few box sizes to fit
        logger.warning("Seed %d: box counting curve has %d points, fits skipped", seed, len(curve))
        record.update(d_b=np.nan, r2_power=np.nan, r2_exp=np.nan, label=MIXED)
        return record
    record.update(d_b=report.d_b, r2_power=report.r2_power, r2_exp=report.r2_exp, label=report.label)
    return record


def _transition_replicate(task):
    spec, seed, n_orderings, r2_cutoff = task
    return ExceptionHandling(_measure)(seed, spec=spec, n_orderings=n_orderings, r2_cutoff=r2_cutoff)


def modal_label(labels):
    """Most frequent label, 'mixed' on a tie."""

    ranked = Counter(labels).most_common()
    if len(ranked) > 1 and ranked[0][1] == ranked[1][1]:
        return MIXED
    return ranked[0][0]


def transition_study(dims_list, p_values, a=10.0, n_reps=10, master_seed=0, n_orderings=DEFAULT_ORDERINGS,
                     r2_cutoff=DEFAULT_R2_CUTOFF, jobs=1):
    """Distances and fractality of LSwTM graphs over grid sizes and p.

    Every (dims, p) cell gets n_reps realizations. Each is measured for
    normalised diameter and average path length and classified from its box
    counting curve. The curve of replication 0 is kept in StatsTable.curves.
    Curves with fewer than 4 points are labelled mixed with undefined fits.

    Args:
        dims_list (list): Grid shapes.
        p_values (list): Rewiring probabilities.
        a (float): Logistic steepness. Defaults to 10.
        n_reps (int): Realizations per cell. Defaults to 10.
        master_seed (int): Base seed. Defaults to 0.
        n_orderings (int): Greedy orderings per curve. Defaults to 10.
        r2_cutoff (float): Classification threshold. Defaults to 0.98.
        jobs (int): Worker processes. Defaults to 1.

    Returns:
        StatsTable: One row per cell with columns dims, p, n, n_reps, the
        statistics of every transition column, fractal_fraction and label.

    """

    if len(dims_list) == 0 or len(p_values) == 0:
        raise InvalidParameterError("The transition study needs at least one grid and one p value.")
    n_reps = check_int(n_reps, 'n_reps', 1)
    master_seed = check_seed(master_seed)
    n_orderings = check_int(n_orderings, 'n_orderings', 1)
    r2_cutoff = check_probability(r2_cutoff, 'r2_cutoff')
    cells = [ModelSpec(kind='lswtm', dims=dims, p=p, a=a) for dims in dims_list for p in p_values]
    tasks = [(cell, replication_seed(master_seed, c, i, n_reps), n_orderings, r2_cutoff)
             for c, cell in enumerate(cells) for i in range(n_reps)]
    logger.info("Running %d transition cells x %d replications", len(cells), n_reps)
    records = run_parallel(_transition_replicate, tasks, jobs)

    rows = []
    curves = {}
    for c, cell in enumerate(cells):
        group = records[c * n_reps:(c + 1) * n_reps]
        labels = [record['label'] for record in group]
        row = {'dims': format_dims(cell.dims), 'p': cell.p, 'n': group[0]['n'], 'n_reps': n_reps}
        row.update(aggregate(group, TRANSITION_COLUMNS))
        row['fractal_fraction'] = float(np.mean([label == FRACTAL for label in labels]))
        row['label'] = modal_label(labels)
        rows.append(row)
        curves[curve_label(cell.dims, cell.p)] = group[0]['curve']
    columns = ['dims', 'p', 'n', 'n_reps'] + stats_columns(TRANSITION_COLUMNS) + ['fractal_fraction', 'label']
    metadata = {
        'model': 'lswtm',
        'dims': ','.join(format_dims(cell_dims) for cell_dims in dict.fromkeys(cell.dims for cell in cells)),
        'p': ','.join(str(p) for p in p_values),
        'a': cells[0].a,
        'n_reps': n_reps,
        'master_seed': master_seed,
        'n_orderings': n_orderings,
        'r2_cutoff': r2_cutoff,
        'scale_note': SCALE_NOTE,
    }
    return StatsTable(frame=pd.DataFrame(rows, columns=columns), axes=('dims', 'p'), metadata=metadata,
                      curves=curves)
