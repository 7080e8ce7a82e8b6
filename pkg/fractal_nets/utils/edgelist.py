#!/usr/bin/env python3
"""Edge-list text format.

    # node_count: 12
    # edge_count: 17
    # model: lswtm
    # seed: 7
    0 1
    0 4
    ...

Header lines start with '#' and hold 'key: value' pairs; every other
non-empty line is an edge 'u v' with u < v and 0-based ids.
"""
import logging

from fractal_nets.utils.graph import Graph
from fractal_nets.utils.exceptions import InvalidParameterError, OutputError

logger = logging.getLogger(__name__)


def write_edge_list(g, path, header=None):
    """Write a graph and its provenance header.

    Args:
        g (Graph): Graph to write.
        path (str): Destination file.
        header (dict): Extra 'key: value' header lines (model, parameters,
            seed, ...). Defaults to None.

    """

    lines = ['# node_count: %d' % g.node_count, '# edge_count: %d' % g.edge_count]
    for key, value in (header or {}).items():
        if key in ('node_count', 'edge_count'):
            continue
        lines.append('# %s: %s' % (key, value))
    lines.extend('%d %d' % edge for edge in g.edges())
    try:
        with open(path, 'w') as stream:
            stream.write('\n'.join(lines) + '\n')
    except OSError as exc:
        raise OutputError(path, exc.strerror or exc) from exc
    logger.info("Wrote %r to %s", g, path)


def read_edge_list(path):
    """Read a graph written by write_edge_list.

    Returns:
        Graph, dict: The graph and its header values as strings.

    """

    header = {}
    edges = []
    with open(path, 'r') as stream:
        for number, line in enumerate(stream, start=1):
            line = line.strip()
            if not line:
                continue
            if line.startswith('#'):
                key, sep, value = line[1:].partition(':')
                if sep:
                    header[key.strip()] = value.strip()
                continue
            parts = line.split()
            if len(parts) != 2:
                raise InvalidParameterError("%s:%d: expected 'u v', got %r." % (path, number, line))
            try:
                edges.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise InvalidParameterError("%s:%d: node ids must be integers." % (path, number))
    if 'node_count' in header:
        node_count = int(header['node_count'])
    else:
        node_count = 1 + max((max(edge) for edge in edges), default=-1)
    g = Graph.from_edges(node_count, edges)
    if 'edge_count' in header and int(header['edge_count']) != g.edge_count:
        raise InvalidParameterError("%s: header says %s edges, found %d." % (path, header['edge_count'], g.edge_count))
    return g, header
