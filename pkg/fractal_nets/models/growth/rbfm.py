#!/usr/bin/env python3
"""Repulsion based fractal growth model.

The SHM growth where an edge is rewired with a probability that peaks when
the mean degree of its endpoints, normalised by the maximum degree, equals Y,
plus deg(v) edges among the offspring of every old node v when m > 1.
"""
import numpy as np

from fractal_nets.models.growth.growth_base import OffspringGrowth
from fractal_nets.models.model_spec import CountPrediction
from fractal_nets.utils.exceptions import InvalidParameterError
from fractal_nets.utils.utils import check_int, check_probability, check_seed


def rbfm_rewire_prob(deg_u, deg_v, deg_max, Y):
    """Rewiring probability 1 - |Y - (deg_u + deg_v) / (2 * deg_max)|.

    Works on scalars or numpy arrays of degrees.

    Args:
        deg_u (int or array_like): Degree of the first endpoint.
        deg_v (int or array_like): Degree of the second endpoint.
        deg_max (int): Maximum degree of the graph.
        Y (float): Repulsion target in [0, 1].

    Returns:
        float or numpy.ndarray: Probability in [0, 1].

    """

    Y = check_probability(Y, 'Y')
    if deg_max <= 0:
        raise InvalidParameterError("deg_max must be positive, got %s." % deg_max)
    deg_u = np.asarray(deg_u, dtype=np.float64)
    deg_v = np.asarray(deg_v, dtype=np.float64)
    if np.any(deg_u < 1) or np.any(deg_v < 1) or np.any(deg_u > deg_max) or np.any(deg_v > deg_max):
        raise InvalidParameterError("Endpoint degrees must lie in [1, deg_max].")
    prob = 1.0 - np.abs(Y - (deg_u + deg_v) / (2.0 * deg_max))
    return float(prob) if prob.ndim == 0 else prob


class RBFMGrowth(OffspringGrowth):

    def __init__(self, m, Y, seed):
        super().__init__(m, seed, within_box=True)
        self.Y = Y

    def rewire_probabilities(self, degrees, edges):
        return rbfm_rewire_prob(degrees[edges[:, 0]], degrees[edges[:, 1]], int(degrees.max()), self.Y)


def rbfm_generate(m, Y, t, seed=0):
    """Generate a repulsion based fractal graph.

    Args:
        m (int): Offspring factor, >= 1.
        Y (float): Repulsion target in [0, 1].
        t (int): Number of iterations, >= 0.
        seed (int): PRNG seed. Defaults to 0.

    Returns:
        Graph: Connected simple graph with expected_counts_rbfm(m, t) nodes and edges.

    """

    m = check_int(m, 'm', 1)
    Y = check_probability(Y, 'Y')
    t = check_int(t, 't', 0)
    return RBFMGrowth(m, Y, check_seed(seed)).run(t)


def expected_counts_rbfm(m, t, n0=2, e0=1):
    """Node and edge counts of the RBFM after t iterations.

    For m > 1: E = e0 (2m+3)^t, N = n0 + e0 m/(m+1) ((2m+3)^t - 1).
    For m = 1 the within-box step is skipped: E = e0 3^t, N = n0 + e0 (3^t - 1).
    """

    m = check_int(m, 'm', 1)
    t = check_int(t, 't', 0)
    n0 = check_int(n0, 'n0', 2)
    e0 = check_int(e0, 'e0', 1)
    if m == 1:
        growth = 3 ** t
        edges = e0 * growth
        nodes = n0 + e0 * (growth - 1)
    else:
        growth = (2 * m + 3) ** t
        edges = e0 * growth
        # (2m+3)^t = 1 mod (m+1), so the division is exact
        nodes = n0 + e0 * m * (growth - 1) // (m + 1)
    return CountPrediction(nodes=nodes, edges=edges, avg_degree=2 * edges / nodes)
