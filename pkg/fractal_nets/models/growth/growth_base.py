#!/usr/bin/env python3
"""Offspring growth shared by the SHM and RBFM models.

One iteration, with every degree frozen at the end of the previous one:

1. growth: node v gains m * deg(v) new leaf children;
2. rewiring: each old edge (u, v) is dropped with its own probability and
   replaced by an edge between a uniformly random child of u and one of v;
3. within-box growth (optional): deg(v) extra edges among the children of
   every old node v, drawn without replacement from the unused pairs.

Draw order per iteration: one uniform per old edge in sorted edge order,
then the child picks of the rewired edges (all u picks, then all v picks),
then the within-box pairs node by node in id order.
"""
import logging

import numpy as np

from fractal_nets.utils.graph import Graph
from fractal_nets.utils.utils import make_rng

logger = logging.getLogger(__name__)


def seed_adjacency():
    """Initial graph of both growth models: two nodes and one edge."""

    return [{1}, {0}]


class OffspringGrowth:
    """Runs the growth iterations on a mutable adjacency list.

    Args:
        m (int): Offspring factor.
        seed (int): PRNG seed.
        within_box (bool): Whether step 3 runs. Defaults to False.

    """

    def __init__(self, m, seed, within_box=False):
        self.m = m
        self.within_box = within_box
        self.rng = make_rng(seed)
        self.adjacency = seed_adjacency()

    def rewire_probabilities(self, degrees, edges):
        """Probability of moving each old edge; overridden per model."""

        raise NotImplementedError

    def run(self, t):
        for iteration in range(t):
            self.step()
            logger.debug("Iteration %d: %d nodes", iteration + 1, len(self.adjacency))
        return Graph(self.adjacency)

    def step(self):
        adjacency = self.adjacency
        old_count = len(adjacency)
        degrees = np.fromiter((len(neighbors) for neighbors in adjacency), dtype=np.int64, count=old_count)
        edges = np.array(sorted((u, v) for u in range(old_count) for v in adjacency[u] if u < v), dtype=np.int64)

        # growth
        n_children = self.m * degrees
        first_child = old_count + np.concatenate(([0], np.cumsum(n_children)[:-1]))
        for v in range(old_count):
            start = int(first_child[v])
            children = range(start, start + int(n_children[v]))
            adjacency.extend({v} for _ in children)
            adjacency[v].update(children)

        # rewiring
        draws = self.rng.random(len(edges))
        moved = edges[draws < self.rewire_probabilities(degrees, edges)]
        if len(moved):
            pick_u = self.rng.integers(0, n_children[moved[:, 0]])
            pick_v = self.rng.integers(0, n_children[moved[:, 1]])
            for (u, v), i, j in zip(moved.tolist(), pick_u.tolist(), pick_v.tolist()):
                x = int(first_child[u]) + i
                y = int(first_child[v]) + j
                adjacency[u].discard(v)
                adjacency[v].discard(u)
                adjacency[x].add(y)
                adjacency[y].add(x)

        # within-box growth
        if self.within_box and self.m > 1:
            for v in range(old_count):
                k = int(n_children[v])
                lower, upper = np.triu_indices(k, 1)
                chosen = self.rng.choice(len(lower), size=int(degrees[v]), replace=False)
                start = int(first_child[v])
                for i in chosen.tolist():
                    x = start + int(lower[i])
                    y = start + int(upper[i])
                    adjacency[x].add(y)
                    adjacency[y].add(x)
