#!/usr/bin/env python3
"""Undirected simple graphs and the distance primitives built on them.

Node ids are dense integers 0..node_count-1. A Graph never changes once it
is built; generators work on plain lists of sets and wrap the result.
"""
import logging
from collections import deque
from dataclasses import dataclass

import numpy as np
import networkx as nx
from scipy import sparse
from scipy.sparse import csgraph

from fractal_nets.utils.exceptions import InvalidParameterError, DisconnectedGraphError, UndefinedMetricError

logger = logging.getLogger(__name__)

UNREACHABLE = -1
# rows of the all-pairs computation handled per shortest_path call
DISTANCE_CHUNK = 256


class Graph:
    """Undirected simple graph.

    Args:
        adjacency (sequence of iterables): Neighbours of every node.

    Raises:
        InvalidParameterError: on self-loops, out-of-range ids or asymmetric
            adjacency.

    """
    __slots__ = ('_adjacency', '_edge_count', '_csr')

    def __init__(self, adjacency):
        adjacency = tuple(frozenset(int(u) for u in neighbors) for neighbors in adjacency)
        n = len(adjacency)
        degree_sum = 0
        for v, neighbors in enumerate(adjacency):
            if v in neighbors:
                raise InvalidParameterError("Self-loop at node %d." % v)
            for u in neighbors:
                if not 0 <= u < n:
                    raise InvalidParameterError("Node %d has out of range neighbour %d." % (v, u))
                if v not in adjacency[u]:
                    raise InvalidParameterError("Adjacency is not symmetric for edge (%d, %d)." % (v, u))
            degree_sum += len(neighbors)
        self._adjacency = adjacency
        self._edge_count = degree_sum // 2
        self._csr = None

    @classmethod
    def from_edges(cls, node_count, edges):
        """Build a graph from an edge list.

        Args:
            node_count (int): Number of nodes.
            edges (iterable): (u, v) pairs.

        Returns:
            Graph: The graph.

        """

        if node_count < 0:
            raise InvalidParameterError("node_count must be non-negative, got %d." % node_count)
        adjacency = [set() for _ in range(node_count)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise InvalidParameterError("Edge (%d, %d) is out of range for %d nodes." % (u, v, node_count))
            if u == v:
                raise InvalidParameterError("Self-loop at node %d." % u)
            if v in adjacency[u]:
                raise InvalidParameterError("Parallel edge (%d, %d)." % (u, v))
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(adjacency)

    @classmethod
    def from_networkx(cls, nx_graph):
        """Convert a networkx graph, numbering nodes in sorted label order."""

        nodes = sorted(nx_graph.nodes)
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in nx_graph.edges))

    def to_networkx(self):
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.node_count))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    @property
    def node_count(self):
        return len(self._adjacency)

    @property
    def edge_count(self):
        return self._edge_count

    @property
    def adjacency(self):
        return self._adjacency

    def neighbors(self, v):
        return self._adjacency[v]

    def degree(self, v):
        return len(self._adjacency[v])

    def degrees(self):
        return np.fromiter((len(neighbors) for neighbors in self._adjacency), dtype=np.int64, count=self.node_count)

    @property
    def max_degree(self):
        return max((len(neighbors) for neighbors in self._adjacency), default=0)

    def has_edge(self, u, v):
        return v in self._adjacency[u]

    def edges(self):
        """Sorted list of edges as (u, v) with u < v."""

        return sorted((u, v) for u, neighbors in enumerate(self._adjacency) for v in neighbors if u < v)

    def to_csr(self):
        """Symmetric adjacency matrix in CSR format."""

        if self._csr is None:
            n = self.node_count
            edges = np.array(self.edges(), dtype=np.int64).reshape(-1, 2)
            rows = np.concatenate((edges[:, 0], edges[:, 1]))
            cols = np.concatenate((edges[:, 1], edges[:, 0]))
            data = np.ones(len(rows), dtype=np.float64)
            self._csr = sparse.csr_matrix((data, (rows, cols)), shape=(n, n))
        return self._csr

    def __eq__(self, other):
        return isinstance(other, Graph) and self._adjacency == other._adjacency

    def __hash__(self):
        return hash(self._adjacency)

    def __repr__(self):
        return 'Graph(node_count=%d, edge_count=%d)' % (self.node_count, self.edge_count)


@dataclass(frozen=True)
class DistanceMap:
    """Hop distances from one source; UNREACHABLE marks other components."""
    source: int
    dist: np.ndarray

    def __getitem__(self, v):
        return int(self.dist[v])

    def reachable(self, v):
        return self.dist[v] != UNREACHABLE


def _check_node(g, v):
    if not 0 <= v < g.node_count:
        raise InvalidParameterError("Node %d is out of range for %d nodes." % (v, g.node_count))


def grid_graph(dims):
    """Lattice graph with row-major node ids.

    Args:
        dims (list): Side lengths n_1..n_d, each >= 1.

    Returns:
        Graph: Nodes differing by 1 in exactly one coordinate are adjacent.

    """

    if len(dims) == 0:
        raise InvalidParameterError("dims must contain at least one side length.")
    if any(int(n) <= 0 for n in dims):
        raise InvalidParameterError("Grid side lengths must be positive, got %s." % list(dims))
    dims = [int(n) for n in dims]
    ids = np.arange(int(np.prod(dims)), dtype=np.int64).reshape(dims)
    edges = []
    for axis, n in enumerate(dims):
        if n < 2:
            continue
        lower = np.take(ids, range(0, n - 1), axis=axis).ravel()
        upper = np.take(ids, range(1, n), axis=axis).ravel()
        edges.append(np.stack((lower, upper), axis=1))
    edges = np.concatenate(edges) if edges else np.empty((0, 2), dtype=np.int64)
    return Graph.from_edges(ids.size, edges.tolist())


def bfs_distances(g, source):
    """Exact hop distances from source.

    Args:
        g (Graph): Graph.
        source (int): Source node.

    Returns:
        DistanceMap: Distances, UNREACHABLE for nodes outside the component.

    """

    _check_node(g, source)
    dist = np.full(g.node_count, UNREACHABLE, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        next_dist = dist[v] + 1
        for u in g.neighbors(v):
            if dist[u] == UNREACHABLE:
                dist[u] = next_dist
                queue.append(u)
    return DistanceMap(source=source, dist=dist)


def is_connected(g):
    if g.node_count == 0:
        raise InvalidParameterError("Connectivity is undefined for an empty graph.")
    return bool(np.all(bfs_distances(g, 0).dist != UNREACHABLE))


def _distance_rows(g):
    """Yield (start, rows) blocks of the all-pairs distance matrix."""

    csr = g.to_csr()
    n = g.node_count
    for start in range(0, n, DISTANCE_CHUNK):
        indices = np.arange(start, min(start + DISTANCE_CHUNK, n))
        rows = csgraph.shortest_path(csr, method='D', directed=False, unweighted=True, indices=indices)
        if np.isinf(rows).any():
            raise DisconnectedGraphError()
        yield start, rows


def distance_matrix(g):
    """All-pairs hop distances, one BFS-equivalent traversal per node.

    Args:
        g (Graph): Connected graph.

    Returns:
        numpy.ndarray: n x n integer matrix (int16 when it fits).

    """

    n = g.node_count
    if n == 0:
        raise InvalidParameterError("Distances are undefined for an empty graph.")
    # a connected graph has diameter < n
    dtype = np.int16 if n <= np.iinfo(np.int16).max else np.int32
    distances = np.empty((n, n), dtype=dtype)
    for start, rows in _distance_rows(g):
        distances[start:start + len(rows)] = rows.astype(dtype)
    return distances


def _distance_totals(g, distances=None):
    if distances is not None:
        return int(distances.max()), int(distances.sum(dtype=np.int64))
    diameter, total = 0, 0
    for _, rows in _distance_rows(g):
        diameter = max(diameter, int(rows.max()))
        total += int(rows.sum())
    return diameter, total


def diameter(g):
    """Largest hop distance between two nodes of a connected graph."""

    if g.node_count == 0:
        raise InvalidParameterError("The diameter of an empty graph is undefined.")
    return _distance_totals(g)[0]


def average_path_length(g):
    """Mean hop distance over all unordered pairs of distinct nodes."""

    return path_statistics(g)[1]


def path_statistics(g, distances=None):
    """Diameter and average path length from a single all-pairs pass.

    Args:
        g (Graph): Connected graph with at least two nodes.
        distances (numpy.ndarray): Precomputed distance_matrix(g). Defaults to None.

    Returns:
        int, float: Diameter and average path length.

    """

    n = g.node_count
    if n < 2:
        raise UndefinedMetricError("Average path length needs at least two nodes.")
    diameter, total = _distance_totals(g, distances)
    return diameter, total / (n * (n - 1))
