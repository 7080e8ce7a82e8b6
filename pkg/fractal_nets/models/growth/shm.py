#!/usr/bin/env python3
import numpy as np

from fractal_nets.models.growth.growth_base import OffspringGrowth
from fractal_nets.models.model_spec import CountPrediction
from fractal_nets.utils.utils import check_int, check_probability, check_seed


class SHMGrowth(OffspringGrowth):
    """Song-Havlin-Makse growth: every old edge moves with the same probability p."""

    def __init__(self, m, p, seed):
        super().__init__(m, seed, within_box=False)
        self.p = p

    def rewire_probabilities(self, degrees, edges):
        return np.full(len(edges), self.p)


def shm_generate(m, p, t, seed=0):
    """Generate a Song-Havlin-Makse graph.

    Args:
        m (int): Offspring factor, >= 1.
        p (float): Rewiring probability in [0, 1].
        t (int): Number of iterations, >= 0.
        seed (int): PRNG seed. Defaults to 0.

    Returns:
        Graph: Connected simple graph with expected_counts_shm(m, t) nodes and edges.

    """

    m = check_int(m, 'm', 1)
    p = check_probability(p, 'p')
    t = check_int(t, 't', 0)
    return SHMGrowth(m, p, check_seed(seed)).run(t)


def expected_counts_shm(m, t, n0=2, e0=1):
    """Node and edge counts of the SHM model after t iterations.

    E(t) = e0 * (2m+1)^t and N(t) = n0 + e0 * ((2m+1)^t - 1).
    """

    m = check_int(m, 'm', 1)
    t = check_int(t, 't', 0)
    n0 = check_int(n0, 'n0', 2)
    e0 = check_int(e0, 'e0', 1)
    growth = (2 * m + 1) ** t
    edges = e0 * growth
    nodes = n0 + e0 * (growth - 1)
    return CountPrediction(nodes=nodes, edges=edges, avg_degree=2 * edges / nodes)
