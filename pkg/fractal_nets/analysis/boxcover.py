#!/usr/bin/env python3
"""Box covering and fractality analysis.

A box of size l_B holds nodes at pairwise distance < l_B, so l_B = 1 gives
singletons and l_B = diameter + 1 a single box. Box counts come from the
greedy colouring of the graph joining nodes at distance >= l_B: colour
classes are boxes.
"""
import logging
from dataclasses import dataclass

import numpy as np
import pandas as pd
from scipy import stats

from fractal_nets.utils.exceptions import InsufficientDataError, InvalidParameterError, SizeLimitError
from fractal_nets.utils.graph import distance_matrix
from fractal_nets.utils.utils import check_int, check_probability, make_rng

logger = logging.getLogger(__name__)

EXACT_NODE_LIMIT = 16
DEFAULT_ORDERINGS = 10
DEFAULT_R2_CUTOFF = 0.98

FRACTAL = 'fractal'
NON_FRACTAL = 'non-fractal'
MIXED = 'mixed'
LABELS = (FRACTAL, NON_FRACTAL, MIXED)


@dataclass(frozen=True)
class BoxCover:
    """Partition of the nodes into boxes of size box_size.

    Attributes:
        box_size (int): l_B.
        boxes (tuple): Boxes as sorted tuples of node ids, ordered by smallest member.

    """
    box_size: int
    boxes: tuple

    @property
    def count(self):
        return len(self.boxes)


@dataclass(frozen=True, eq=False)
class NbCurve:
    """Box counts N_B against box sizes l_B.

    Attributes:
        sizes (numpy.ndarray): Strictly increasing positive box sizes.
        counts (numpy.ndarray): Positive box counts.

    """
    sizes: np.ndarray
    counts: np.ndarray

    def __post_init__(self):
        sizes = np.asarray(self.sizes, dtype=np.float64)
        counts = np.asarray(self.counts, dtype=np.float64)
        if sizes.ndim != 1 or sizes.shape != counts.shape:
            raise InvalidParameterError("Box sizes and counts must be 1-D sequences of equal length.")
        if np.any(sizes <= 0) or np.any(np.diff(sizes) <= 0):
            raise InvalidParameterError("Box sizes must be positive and strictly increasing.")
        if np.any(counts <= 0):
            raise InvalidParameterError("Box counts must be positive.")
        object.__setattr__(self, 'sizes', sizes)
        object.__setattr__(self, 'counts', counts)

    @classmethod
    def from_points(cls, points):
        points = list(points)
        return cls(sizes=[l for l, _ in points], counts=[n for _, n in points])

    @property
    def points(self):
        return [(_plain(l), _plain(n)) for l, n in zip(self.sizes, self.counts)]

    def __len__(self):
        return len(self.sizes)

    def __eq__(self, other):
        return isinstance(other, NbCurve) and np.array_equal(self.sizes, other.sizes) \
            and np.array_equal(self.counts, other.counts)

    def to_frame(self):
        return pd.DataFrame({'l_b': [l for l, _ in self.points], 'n_b': [n for _, n in self.points]})

    def steps(self):
        """The curve reduced to the smallest l_B of every run of equal N_B.

        Plateaus of the greedy counts, long near the saturated end of the
        curve, then weigh one point each in a fit.

        Returns:
            NbCurve: The reduced curve.

        """

        keep = np.concatenate(([True], np.diff(self.counts) != 0))
        return NbCurve(sizes=self.sizes[keep], counts=self.counts[keep])


def _plain(value):
    value = float(value)
    return int(value) if value.is_integer() else value


@dataclass(frozen=True)
class FractalityReport:
    """Result of classify_fractality.

    Attributes:
        d_b (float): Box dimension, minus the log-log slope.
        r2_power (float): R^2 of the log-log fit.
        r2_exp (float): R^2 of the semi-log fit.
        decay (float): Minus the semi-log slope.
        label (str): 'fractal', 'non-fractal' or 'mixed'.

    """
    d_b: float
    r2_power: float
    r2_exp: float
    decay: float
    label: str

    def to_frame(self):
        return pd.DataFrame([{'d_b': self.d_b, 'r2_power': self.r2_power, 'r2_exp': self.r2_exp,
                              'label': self.label}])


def _node_order(n, seed):
    if seed is None:
        return np.arange(n)
    return make_rng(seed).permutation(n)


def _greedy_colors(distances, order, max_size):
    """Greedy colouring for every box size 2..max_size in one sweep.

    Each node takes, at every size l at once, the smallest box not used by
    an earlier node at distance >= l.

    Returns:
        numpy.ndarray: colors[l, v] is the box of node v at size l (rows 0
        and 1 unused).

    """

    n = len(order)
    colors = np.zeros((max_size + 1, n), dtype=np.int32)
    for i in range(1, n):
        v = order[i]
        previous = order[:i]
        d = distances[v, previous]
        far = d >= 2
        if not far.any():
            continue
        previous, d = previous[far], d[far]
        top = min(int(d.max()), max_size) + 1
        # conflicts[k, j]: previous[j] blocks its box at size k + 2
        conflicts = d[None, :] >= np.arange(2, top)[:, None]
        rows, cols = np.nonzero(conflicts)
        rows += 2
        taken = colors[rows, previous[cols]]
        # one column past the largest taken box, so every row has a free one
        used = np.zeros((top, int(taken.max()) + 2), dtype=bool)
        used[rows, taken] = True
        colors[2:top, v] = np.argmin(used[2:], axis=1)
    return colors


def _boxes_from_colors(colors):
    boxes = {}
    for v, c in enumerate(colors.tolist()):
        boxes.setdefault(c, []).append(v)
    return tuple(sorted(tuple(box) for box in boxes.values()))


def greedy_box_cover(g, l_B, seed=None, distances=None):
    """Cover g with boxes of size l_B by greedy colouring.

    Args:
        g (Graph): Connected graph.
        l_B (int): Box size, >= 1.
        seed (int): Seed of the node ordering, node-id order when None.
            Defaults to None.
        distances (numpy.ndarray): Precomputed distance_matrix(g). Defaults to None.

    Returns:
        BoxCover: A valid cover.

    """

    l_B = check_int(l_B, 'l_B', 1)
    if distances is None:
        distances = distance_matrix(g)
    n = g.node_count
    if l_B == 1:
        return BoxCover(box_size=1, boxes=tuple((v,) for v in range(n)))
    max_size = min(l_B, int(distances.max()) + 1)
    colors = _greedy_colors(distances, _node_order(n, seed), max_size)
    return BoxCover(box_size=l_B, boxes=_boxes_from_colors(colors[max_size]))


def is_valid_cover(g, cover, distances=None):
    """Whether cover partitions the nodes of g into boxes of diameter < box_size."""

    if distances is None:
        distances = distance_matrix(g)
    members = [v for box in cover.boxes for v in box]
    if sorted(members) != list(range(g.node_count)):
        return False
    for box in cover.boxes:
        box = np.asarray(box)
        if len(box) and distances[np.ix_(box, box)].max() >= cover.box_size:
            return False
    return True


def exact_min_boxes(g, l_B, distances=None):
    """Minimum number of boxes of size l_B, by branch and bound.

    Nodes are placed in BFS order from node 0, each into a compatible open
    box or a new one; branches that cannot beat the best cover found so far
    (starting from one box per node) are cut.

    Args:
        g (Graph): Connected graph with at most 16 nodes.
        l_B (int): Box size, >= 1.

    Returns:
        int: The minimum box count.

    Raises:
        SizeLimitError: if g has more than 16 nodes.

    """

    l_B = check_int(l_B, 'l_B', 1)
    n = g.node_count
    if n > EXACT_NODE_LIMIT:
        raise SizeLimitError("The exact search supports at most %d nodes, got %d." % (EXACT_NODE_LIMIT, n))
    if distances is None:
        distances = distance_matrix(g)
    if l_B > int(distances.max()):
        return 1
    order = np.argsort(distances[0], kind='stable').tolist()
    compatible = [sum(1 << int(u) for u in np.flatnonzero(distances[v] < l_B)) for v in range(n)]
    best = [n]
    boxes = []

    def search(i):
        if len(boxes) >= best[0]:
            return
        if i == n:
            best[0] = len(boxes)
            return
        v = order[i]
        for k, members in enumerate(boxes):
            if members & ~compatible[v] == 0:
                boxes[k] = members | (1 << v)
                search(i + 1)
                boxes[k] = members
        boxes.append(1 << v)
        search(i + 1)
        boxes.pop()

    search(0)
    return best[0]


def nb_curve(g, seed=0, n_orderings=DEFAULT_ORDERINGS, distances=None):
    """Box counts for l_B = 1, 2, ... up to the first size covered by one box.

    The first ordering is node-id order, the others are shuffled by a
    generator seeded with seed. N_B is the minimum count over the orderings,
    made non-increasing with a running minimum (a cover valid at l_B is also
    valid at l_B + 1).

    Args:
        g (Graph): Connected graph.
        seed (int): Seed of the shuffled orderings. Defaults to 0.
        n_orderings (int): Number of greedy runs. Defaults to 10.
        distances (numpy.ndarray): Precomputed distance_matrix(g). Defaults to None.

    Returns:
        NbCurve: The curve, N_B(1) = node count and final N_B = 1.

    """

    n_orderings = check_int(n_orderings, 'n_orderings', 1)
    if distances is None:
        distances = distance_matrix(g)
    n = g.node_count
    max_size = int(distances.max()) + 1
    counts = np.full(max_size + 1, n, dtype=np.int64)
    rng = make_rng(seed)
    for k in range(n_orderings):
        order = np.arange(n) if k == 0 else rng.permutation(n)
        colors = _greedy_colors(distances, order, max_size)
        counts[2:] = np.minimum(counts[2:], colors[2:].max(axis=1) + 1)
        logger.debug("Ordering %d of %d: N_B = %s", k + 1, n_orderings, counts[1:].tolist())
    counts = np.minimum.accumulate(counts[1:])
    last = int(np.flatnonzero(counts == 1)[0])
    sizes = np.arange(1, last + 2)
    return NbCurve(sizes=sizes, counts=counts[:last + 1])


def _fit(x, y, minimum=3):
    if len(x) < minimum:
        raise InsufficientDataError("Need at least %d points to fit, got %d." % (minimum, len(x)))
    result = stats.linregress(x, y)
    return float(result.slope), float(result.rvalue) ** 2


def fit_power_law(curve):
    """Least squares fit of log N_B against log l_B.

    Returns:
        float, float: d_B (minus the slope) and R^2.

    """

    slope, r2 = _fit(np.log(curve.sizes), np.log(curve.counts))
    return 0.0 - slope, r2


def fit_exponential(curve):
    """Least squares fit of log N_B against l_B.

    Returns:
        float, float: Decay rate (minus the slope) and R^2.

    """

    slope, r2 = _fit(curve.sizes, np.log(curve.counts))
    return 0.0 - slope, r2


def classify_fractality(curve, r2_cutoff=DEFAULT_R2_CUTOFF, steps=False):
    """Label a curve fractal, non-fractal or mixed.

    Fractal when the power-law fit reaches r2_cutoff and beats the
    exponential fit, non-fractal in the opposite case, mixed otherwise.

    Args:
        curve (NbCurve): Curve with at least 4 points.
        r2_cutoff (float): Minimum R^2 of the winning fit. Defaults to 0.98.
        steps (bool): Fit curve.steps() instead of every point. Defaults to False.

    Returns:
        FractalityReport: Fits and label.

    """

    r2_cutoff = check_probability(r2_cutoff, 'r2_cutoff')
    if steps:
        curve = curve.steps()
    if len(curve) < 4:
        raise InsufficientDataError("Classification needs at least 4 points, got %d." % len(curve))
    d_b, r2_power = fit_power_law(curve)
    decay, r2_exp = fit_exponential(curve)
    if r2_power >= r2_cutoff and r2_power > r2_exp:
        label = FRACTAL
    elif r2_exp >= r2_cutoff and r2_exp > r2_power:
        label = NON_FRACTAL
    else:
        label = MIXED
    return FractalityReport(d_b=d_b, r2_power=r2_power, r2_exp=r2_exp, decay=decay, label=label)
