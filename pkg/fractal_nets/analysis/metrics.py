#!/usr/bin/env python3
import math
import logging
from dataclasses import dataclass, asdict

import numpy as np
import pandas as pd
from scipy import sparse, stats

from fractal_nets.utils.exceptions import ConvergenceError, DisconnectedGraphError, InvalidParameterError, \
    UndefinedMetricError
from fractal_nets.utils.graph import is_connected, path_statistics

logger = logging.getLogger(__name__)

EIGENVECTOR_TOLERANCE = 1e-10
EIGENVECTOR_MAX_ITERATIONS = 100000

METRIC_COLUMNS = ('n', 'm_edges', 'avg_path_length', 'norm_avg_path_length', 'norm_diameter', 'norm_max_degree',
                  'avg_clustering', 'assortativity', 'max_eigenvector_centrality', 'degree_skewness')


@dataclass(frozen=True)
class MetricRecord:
    """Structural metrics of one graph realization.

    Undefined metrics (zero degree variance) are None.

    Attributes:
        n (int): Node count.
        m_edges (int): Edge count.
        avg_path_length (float): Mean hop distance over node pairs.
        norm_avg_path_length (float): avg_path_length / ln(n).
        norm_diameter (float): diameter / ln(n).
        norm_max_degree (float): deg_max / (n - 1).
        avg_clustering (float): Mean local clustering coefficient.
        assortativity (float): Degree assortativity, or None.
        max_eigenvector_centrality (float): Largest entry of the unit Perron eigenvector.
        degree_skewness (float): Population skewness of the degrees, or None.

    """
    n: int
    m_edges: int
    avg_path_length: float
    norm_avg_path_length: float
    norm_diameter: float
    norm_max_degree: float
    avg_clustering: float
    assortativity: float
    max_eigenvector_centrality: float
    degree_skewness: float

    def as_dict(self):
        return asdict(self)

    def to_frame(self):
        return pd.DataFrame([self.as_dict()], columns=list(METRIC_COLUMNS))


def assortativity(g):
    """Pearson correlation of the degrees at the two ends of every edge.

    Each edge is counted in both orientations.

    Returns:
        float: Coefficient in [-1, 1], or None when all edge endpoints share
        one degree.

    """

    if g.edge_count == 0:
        raise UndefinedMetricError("Assortativity needs at least one edge.")
    degrees = g.degrees().astype(np.float64)
    edges = np.array(g.edges(), dtype=np.int64)
    x = np.concatenate((degrees[edges[:, 0]], degrees[edges[:, 1]]))
    y = np.concatenate((degrees[edges[:, 1]], degrees[edges[:, 0]]))
    # x and y share their marginal
    mean = x.mean()
    variance = np.mean(x * x) - mean * mean
    if variance <= 0:
        return None
    r = (np.mean(x * y) - mean * mean) / variance
    return float(np.clip(r, -1.0, 1.0))


def avg_clustering(g):
    """Mean over nodes of the local clustering coefficient (0 below degree 2)."""

    if g.node_count == 0:
        raise InvalidParameterError("Clustering is undefined for an empty graph.")
    adjacency = g.to_csr()
    # twice the triangles through each node
    closed = np.asarray((adjacency @ adjacency).multiply(adjacency).sum(axis=1)).ravel()
    degrees = g.degrees().astype(np.float64)
    pairs = degrees * (degrees - 1)
    local = np.divide(closed, pairs, out=np.zeros_like(closed), where=pairs > 0)
    return float(local.mean())


def eigenvector_centrality(g, tol=EIGENVECTOR_TOLERANCE, max_iter=EIGENVECTOR_MAX_ITERATIONS):
    """Unit-norm Perron eigenvector of the adjacency matrix.

    Power iteration runs on A + I, which has the same eigenvectors and a
    strictly dominant Perron eigenvalue on bipartite graphs.

    Args:
        g (Graph): Connected graph.
        tol (float): Max-norm change between iterates. Defaults to 1e-10.
        max_iter (int): Iteration cap. Defaults to 1e5.

    Returns:
        numpy.ndarray: Non-negative entries with L2 norm 1.

    Raises:
        DisconnectedGraphError: if g is not connected.
        ConvergenceError: if the iterates did not settle within max_iter.

    """

    if not is_connected(g):
        raise DisconnectedGraphError()
    n = g.node_count
    shifted = g.to_csr() + sparse.identity(n, format='csr')
    x = np.full(n, 1.0 / math.sqrt(n))
    for iteration in range(1, max_iter + 1):
        nxt = shifted @ x
        nxt /= np.linalg.norm(nxt)
        if np.max(np.abs(nxt - x)) < tol:
            logger.debug("Power iteration converged after %d iterations", iteration)
            return nxt
        x = nxt
    raise ConvergenceError(max_iter)


def max_eigenvector_centrality(g):
    return float(eigenvector_centrality(g).max())


def degree_skewness(g):
    """Fisher-Pearson skewness m3 / m2^(3/2) of the degree sequence, population moments.

    Returns:
        float: Skewness, or None for a regular graph.

    """

    if g.node_count < 2:
        raise UndefinedMetricError("Degree skewness needs at least two nodes.")
    degrees = g.degrees()
    if np.all(degrees == degrees[0]):
        return None
    return float(stats.skew(degrees.astype(np.float64), bias=True))


def metric_suite(g, distances=None):
    """Compute every metric of a MetricRecord.

    Distances are normalised by the natural logarithm of the node count and
    the maximum degree by n - 1.

    Args:
        g (Graph): Connected graph with at least 3 nodes.
        distances (numpy.ndarray): Precomputed distance_matrix(g). Defaults to None.

    Returns:
        MetricRecord: The metrics.

    """

    n = g.node_count
    if n < 3:
        raise UndefinedMetricError("The metric suite needs at least 3 nodes, got %d." % n)
    diameter, apl = path_statistics(g, distances)
    log_n = math.log(n)
    return MetricRecord(
        n=n,
        m_edges=g.edge_count,
        avg_path_length=apl,
        norm_avg_path_length=apl / log_n,
        norm_diameter=diameter / log_n,
        norm_max_degree=g.max_degree / (n - 1),
        avg_clustering=avg_clustering(g),
        assortativity=assortativity(g),
        max_eigenvector_centrality=max_eigenvector_centrality(g),
        degree_skewness=degree_skewness(g),
    )
