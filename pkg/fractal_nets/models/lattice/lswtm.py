#!/usr/bin/env python3
"""Lattice small-world transition model.

Every edge of a grid is visited once, in a seed-shuffled order, and with
probability p one of its endpoints (chosen by a fair coin) is moved to a
target drawn with a logistic preference for high degree. Node and edge
counts of the grid are kept.

Draw order: one permutation of the grid edges, then per edge one uniform
for the Bernoulli trial and, when the edge is rewired, one uniform for the
orientation and one uniform per weighted target sample.
"""
import logging
from collections import deque

import numpy as np
from scipy.special import expit

from fractal_nets.models.model_spec import ModelSpec
from fractal_nets.utils.exceptions import InvalidParameterError
from fractal_nets.utils.graph import Graph, grid_graph
from fractal_nets.utils.utils import make_rng

logger = logging.getLogger(__name__)


def lswtm_attach_weight(deg, deg_max, a):
    """Logistic attachment weight 1 / (1 + exp(-a (deg / deg_max - 1/2))).

    Args:
        deg (int or array_like): Degree of the candidate target, 0 <= deg <= deg_max.
        deg_max (int): Maximum degree of the current graph.
        a (float): Positive steepness.

    Returns:
        float or numpy.ndarray: Weight in (0, 1).

    """

    if deg_max <= 0:
        raise InvalidParameterError("deg_max must be positive, got %s." % deg_max)
    if a <= 0:
        raise InvalidParameterError("a must be positive, got %s." % a)
    deg = np.asarray(deg, dtype=np.float64)
    if np.any(deg < 0) or np.any(deg > deg_max):
        raise InvalidParameterError("Degrees must lie in [0, deg_max].")
    weight = expit(a * (deg / deg_max - 0.5))
    return float(weight) if weight.ndim == 0 else weight


class LatticeRewiring:
    """One LSwTM pass over a grid.

    Args:
        dims (list): Grid side lengths.
        p (float): Rewiring probability of each grid edge.
        a (float): Logistic steepness.
        seed (int): PRNG seed.

    """

    def __init__(self, dims, p, a, seed):
        self.p = p
        self.a = a
        self.rng = make_rng(seed)
        grid = grid_graph(dims)
        self.grid_edges = np.array(grid.edges(), dtype=np.int64)
        self.adjacency = [set(neighbors) for neighbors in grid.adjacency]
        self.degrees = grid.degrees()
        self.deg_max = int(self.degrees.max())
        self.skipped = 0

    def run(self):
        order = self.rng.permutation(len(self.grid_edges))
        rewired = 0
        for u, v in self.grid_edges[order].tolist():
            if self.rng.random() >= self.p:
                continue
            if self.rng.random() < 0.5:
                u, v = v, u
            if self.rewire(u, v):
                rewired += 1
            else:
                self.skipped += 1
        logger.debug("Rewired %d of %d grid edges, skipped %d", rewired, len(self.grid_edges), self.skipped)
        return Graph(self.adjacency)

    def candidates(self, v):
        """Mask of V minus v and its neighbours."""

        mask = np.ones(len(self.adjacency), dtype=bool)
        mask[v] = False
        mask[list(self.adjacency[v])] = False
        return mask

    def sample(self, weights, mask):
        masked = np.where(mask, weights, 0.0)
        cumulative = np.cumsum(masked)
        draw = self.rng.random() * cumulative[-1]
        # zero-weight entries repeat the previous sum and are never hit
        target = int(np.searchsorted(cumulative, draw, side='right'))
        if target == len(cumulative):
            target = int(np.flatnonzero(masked)[-1])
        return target

    def rewire(self, vi, vj):
        """Replace (vi, vj) by (vi, vk), or by (vj, vk) if that disconnects."""

        mask = self.candidates(vi)
        if not mask.any():
            return False
        weights = lswtm_attach_weight(self.degrees, self.deg_max, self.a)
        vk = self.sample(weights, mask)
        self._move(vi, vj, vi, vk)

        component = self.component_without(vj, vi)
        if component is not None:
            # vj lost its only route to vi: attach vj to the target instead
            self._remove(vi, vk)
            if vk in self.adjacency[vj]:
                fallback = self.candidates(vj)
                fallback[vi] = False
                fallback[list(component)] = False
                if not fallback.any():
                    self._add(vi, vj)
                    return False
                vk = self.sample(weights, fallback)
            self._add(vj, vk)
        self.deg_max = int(self.degrees.max())
        return True

    def component_without(self, source, target):
        """Nodes reachable from source, or None once target is reached."""

        seen = {source}
        queue = deque([source])
        while queue:
            x = queue.popleft()
            for y in self.adjacency[x]:
                if y == target:
                    return None
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def _move(self, u, v, x, y):
        self._remove(u, v)
        self._add(x, y)

    def _add(self, u, v):
        self.adjacency[u].add(v)
        self.adjacency[v].add(u)
        self.degrees[u] += 1
        self.degrees[v] += 1

    def _remove(self, u, v):
        self.adjacency[u].discard(v)
        self.adjacency[v].discard(u)
        self.degrees[u] -= 1
        self.degrees[v] -= 1


def lswtm_generate(dims, p, a=10.0, seed=0):
    """Generate an LSwTM graph.

    Args:
        dims (list): Grid side lengths, product >= 3.
        p (float): Rewiring probability in [0, 1].
        a (float): Logistic steepness, > 0. Defaults to 10.
        seed (int): PRNG seed. Defaults to 0.

    Returns:
        Graph: Connected graph with the grid's node and edge counts.

    """

    spec = ModelSpec(kind='lswtm', dims=dims, p=p, a=a, seed=seed)
    return LatticeRewiring(list(spec.dims), spec.p, spec.a, spec.seed).run()
