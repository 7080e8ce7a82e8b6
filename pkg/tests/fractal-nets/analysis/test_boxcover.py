#!/usr/bin/env python3
import math

import networkx as nx
import numpy as np
import pytest

from fractal_nets.analysis import boxcover
from fractal_nets.analysis.boxcover import BoxCover, NbCurve, classify_fractality, exact_min_boxes, \
    fit_exponential, fit_power_law, greedy_box_cover, is_valid_cover, nb_curve
from fractal_nets.utils.exceptions import DisconnectedGraphError, InsufficientDataError, InvalidParameterError, \
    SizeLimitError
from fractal_nets.utils.graph import Graph, diameter, distance_matrix, grid_graph
from fractal_nets.utils.utils import make_rng


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n):
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def oracle_corpus():
    """Connected graphs of the atlas (up to 7 nodes), random 8-node graphs,
    and paths, cycles and stars up to 16 nodes."""

    graphs = [Graph.from_networkx(G) for G in nx.graph_atlas_g()[1:] if nx.is_connected(G)]
    rng = np.random.default_rng(8)
    while len(graphs) < 1100:
        G = nx.gnp_random_graph(8, rng.uniform(0.2, 0.6), seed=int(rng.integers(2**31)))
        if nx.is_connected(G):
            graphs.append(Graph.from_networkx(G))
    for n in range(2, 17):
        graphs.extend([path(n), star(n)])
        if n >= 3:
            graphs.append(cycle(n))
    return graphs


@pytest.fixture(scope='module')
def corpus():
    return oracle_corpus()


### greedy_box_cover ###
@pytest.mark.commit
def test_greedy_path_of_8():
    cover = greedy_box_cover(path(8), 2)
    assert cover.count == 4
    assert cover.boxes == ((0, 1), (2, 3), (4, 5), (6, 7))


@pytest.mark.commit
def test_greedy_singletons_at_size_one():
    g = grid_graph([3, 3])
    cover = greedy_box_cover(g, 1, seed=5)
    assert cover.count == 9
    assert is_valid_cover(g, cover)


@pytest.mark.commit
@pytest.mark.parametrize('g', [path(9), cycle(7), grid_graph([3, 5]), star(6)])
def test_greedy_single_box_beyond_diameter(g):
    assert greedy_box_cover(g, diameter(g) + 1).count == 1
    assert greedy_box_cover(g, diameter(g) + 10, seed=3).count == 1


@pytest.mark.commit
def test_greedy_is_deterministic_given_seed():
    g = Graph.from_networkx(nx.connected_watts_strogatz_graph(40, 4, 0.3, seed=1))
    assert greedy_box_cover(g, 3, seed=11) == greedy_box_cover(g, 3, seed=11)


def far_pairs_graph(g, l_B, distances):
    """Nodes of g joined when at distance >= l_B."""

    G = nx.Graph()
    G.add_nodes_from(range(g.node_count))
    G.add_edges_from(zip(*np.nonzero(np.triu(distances >= l_B))))
    return G


@pytest.mark.commit
@pytest.mark.parametrize('seed', [None, 0, 9])
def test_greedy_matches_networkx_colouring(seed):
    g = Graph.from_networkx(nx.connected_watts_strogatz_graph(50, 4, 0.2, seed=3))
    distances = distance_matrix(g)
    order = list(range(g.node_count)) if seed is None else make_rng(seed).permutation(g.node_count).tolist()
    for l_B in range(2, int(distances.max()) + 2):
        colors = nx.greedy_color(far_pairs_graph(g, l_B, distances), strategy=lambda G, c: iter(order))
        boxes = {}
        for v, c in colors.items():
            boxes.setdefault(c, []).append(int(v))
        expected = tuple(sorted(tuple(sorted(box)) for box in boxes.values()))
        assert greedy_box_cover(g, l_B, seed=seed, distances=distances).boxes == expected


@pytest.mark.commit
def test_greedy_errors():
    with pytest.raises(InvalidParameterError):
        greedy_box_cover(path(4), 0)
    with pytest.raises(DisconnectedGraphError):
        greedy_box_cover(Graph.from_edges(4, [(0, 1), (2, 3)]), 2)


### is_valid_cover ###
@pytest.mark.commit
def test_is_valid_cover_rejects_bad_covers():
    g = path(4)
    assert is_valid_cover(g, BoxCover(box_size=2, boxes=((0, 1), (2, 3))))
    # distance 2 inside a box of size 2
    assert not is_valid_cover(g, BoxCover(box_size=2, boxes=((0, 2), (1,), (3,))))
    # node 3 missing
    assert not is_valid_cover(g, BoxCover(box_size=4, boxes=((0, 1, 2),)))
    # node 1 twice
    assert not is_valid_cover(g, BoxCover(box_size=4, boxes=((0, 1), (1, 2, 3))))


### exact_min_boxes ###
test_exact = [
    (path(8), 4, 2),
    (cycle(4), 2, 2),
    (star(5), 3, 1),
    (star(5), 2, 4),
    (cycle(6), 3, 2),
]
@pytest.mark.commit
@pytest.mark.parametrize('g, l_B, expected_boxes', test_exact)
def test_exact_min_boxes(g, l_B, expected_boxes):
    assert exact_min_boxes(g, l_B) == expected_boxes


@pytest.mark.commit
@pytest.mark.parametrize('n', range(1, 17))
def test_exact_min_boxes_paths(n):
    g = path(n) if n > 1 else Graph([set()])
    for l_B in range(1, n + 1):
        assert exact_min_boxes(g, l_B) == math.ceil(n / l_B)


@pytest.mark.commit
def test_exact_beats_greedy_in_id_order():
    # path 2-0-1-3: id order opens a third box for node 3
    g = Graph.from_edges(4, [(2, 0), (0, 1), (1, 3)])
    assert greedy_box_cover(g, 2).count == 3
    assert exact_min_boxes(g, 2) == 2


@pytest.mark.commit
def test_exact_min_boxes_does_not_use_greedy(monkeypatch):
    def fail(*args, **kwargs):
        raise AssertionError("greedy cover called")
    monkeypatch.setattr(boxcover, 'greedy_box_cover', fail)
    assert exact_min_boxes(cycle(6), 3) == 2
    assert exact_min_boxes(star(5), 2) == 4


@pytest.mark.commit
def test_exact_min_boxes_size_limit():
    with pytest.raises(SizeLimitError):
        exact_min_boxes(path(17), 3)


@pytest.mark.commit
def test_greedy_dominates_exact_on_oracle_corpus(corpus):
    for g in corpus:
        distances = distance_matrix(g)
        for l_B in range(1, int(distances.max()) + 2):
            cover = greedy_box_cover(g, l_B, distances=distances)
            assert is_valid_cover(g, cover, distances)
            assert cover.count >= exact_min_boxes(g, l_B, distances=distances)


### nb_curve ###
@pytest.mark.commit
def test_nb_curve_path_of_8():
    assert nb_curve(path(8)).points == [(1, 8), (2, 4), (3, 3), (4, 2), (5, 2), (6, 2), (7, 2), (8, 1)]


@pytest.mark.commit
def test_nb_curve_single_edge():
    assert nb_curve(path(2)).points == [(1, 2), (2, 1)]


@pytest.mark.commit
def test_nb_curve_single_node():
    assert nb_curve(Graph([set()])).points == [(1, 1)]


@pytest.mark.commit
@pytest.mark.parametrize('g', [grid_graph([6, 7]), cycle(11), star(9),
                               Graph.from_networkx(nx.connected_watts_strogatz_graph(80, 4, 0.1, seed=2))])
def test_nb_curve_shape(g):
    curve = nb_curve(g, seed=4, n_orderings=3)
    counts = curve.counts
    assert curve.sizes[0] == 1
    assert np.all(np.diff(curve.sizes) == 1)
    assert counts[0] == g.node_count
    assert counts[-1] == 1
    assert np.all(np.diff(counts) <= 0)
    # truncated at the first single box
    assert np.count_nonzero(counts == 1) == 1


@pytest.mark.commit
def test_nb_curve_more_orderings_never_worse():
    g = Graph.from_networkx(nx.connected_watts_strogatz_graph(60, 4, 0.2, seed=6))
    few = nb_curve(g, seed=1, n_orderings=1)
    many = nb_curve(g, seed=1, n_orderings=8)
    assert len(many) <= len(few)
    assert np.all(many.counts <= few.counts[:len(many)])


@pytest.mark.commit
def test_nb_curve_reproducible_and_reuses_distances():
    g = grid_graph([7, 7])
    assert nb_curve(g, seed=3) == nb_curve(g, seed=3, distances=distance_matrix(g))


@pytest.mark.commit
def test_nb_curve_grid_16x16_scales_like_a_plane():
    curve = nb_curve(grid_graph([16, 16]), seed=0, n_orderings=3)
    d_b, r2 = fit_power_law(curve)
    assert 1.3 < d_b < 2.3
    assert r2 > 0.85


@pytest.mark.commit
def test_nb_curve_to_frame():
    frame = nb_curve(path(3)).to_frame()
    assert list(frame.columns) == ['l_b', 'n_b']
    assert frame.values.tolist() == [[1, 3], [2, 2], [3, 1]]


@pytest.mark.commit
def test_nb_curve_steps():
    curve = nb_curve(path(8))
    assert curve.steps().points == [(1, 8), (2, 4), (3, 3), (4, 2), (8, 1)]
    assert curve.steps().steps() == curve.steps()
    assert NbCurve.from_points([(1, 5), (2, 5), (3, 5)]).steps().points == [(1, 5)]


@pytest.mark.commit
@pytest.mark.parametrize('sizes, counts', [([1, 1, 2], [3, 2, 1]), ([1, 2], [3, 0]), ([0, 1], [2, 1]), ([1, 2], [1])])
def test_nb_curve_invalid(sizes, counts):
    with pytest.raises(InvalidParameterError):
        NbCurve(sizes=sizes, counts=counts)


### fits ###
test_power_laws = [
    ([(1, 64), (2, 16), (4, 4), (8, 1)], 2.0),
    ([(1, 8), (2, 4), (4, 2), (8, 1)], 1.0),
    ([(1, 1000), (3, 1000 / 3**1.46), (9, 1000 / 9**1.46), (27, 1000 / 27**1.46)], 1.46),
]
@pytest.mark.commit
@pytest.mark.parametrize('points, expected_d_b', test_power_laws)
def test_fit_power_law_exact(points, expected_d_b):
    d_b, r2 = fit_power_law(NbCurve.from_points(points))
    assert abs(d_b - expected_d_b) < 1e-9
    assert abs(r2 - 1.0) < 1e-12


@pytest.mark.commit
def test_fit_power_law_prefers_exponential_data_less():
    curve = NbCurve.from_points([(1, 100), (2, 37), (3, 14), (4, 5)])
    _, r2_power = fit_power_law(curve)
    _, r2_exp = fit_exponential(curve)
    assert r2_power < 0.99
    assert r2_power < r2_exp


@pytest.mark.commit
def test_fit_exponential_exact():
    curve = NbCurve.from_points([(l, 100 * math.exp(-l)) for l in (1, 2, 3)])
    decay, r2 = fit_exponential(curve)
    assert abs(decay - 1.0) < 1e-9
    assert abs(r2 - 1.0) < 1e-12


@pytest.mark.commit
def test_fit_exponential_on_power_law():
    _, r2 = fit_exponential(NbCurve.from_points([(1, 64), (2, 16), (4, 4), (8, 1)]))
    assert r2 < 1.0


@pytest.mark.commit
def test_fit_exponential_constant():
    decay, _ = fit_exponential(NbCurve.from_points([(1, 5), (2, 5), (3, 5)]))
    assert decay == 0.0


@pytest.mark.commit
@pytest.mark.parametrize('fit', [fit_power_law, fit_exponential])
def test_fits_need_three_points(fit):
    with pytest.raises(InsufficientDataError):
        fit(NbCurve.from_points([(1, 4), (2, 1)]))


### classify_fractality ###
@pytest.mark.commit
def test_classify_power_law_is_fractal():
    report = classify_fractality(NbCurve.from_points([(1, 64), (2, 16), (4, 4), (8, 1)]))
    assert report.label == 'fractal'
    assert abs(report.d_b - 2.0) < 1e-9


@pytest.mark.commit
def test_classify_exponential_is_non_fractal():
    report = classify_fractality(NbCurve.from_points([(l, 100 * math.exp(-l)) for l in (1, 2, 3, 4)]))
    assert report.label == 'non-fractal'
    assert abs(report.decay - 1.0) < 1e-9


@pytest.mark.commit
def test_classify_mixed_when_neither_fit_is_good():
    curve = NbCurve.from_points([(1, 50), (2, 10), (3, 9), (4, 2), (5, 1.9), (6, 1)])
    report = classify_fractality(curve)
    assert report.r2_power < 0.98 and report.r2_exp < 0.98
    assert report.label == 'mixed'


@pytest.mark.commit
def test_classify_cutoff_is_configurable():
    curve = NbCurve.from_points([(1, 100), (2, 37), (3, 14), (4, 5)])
    assert classify_fractality(curve, r2_cutoff=0.0).label == 'non-fractal'
    assert classify_fractality(curve, r2_cutoff=1.0).label == 'mixed'


@pytest.mark.commit
def test_classify_steps():
    curve = NbCurve.from_points([(1, 64), (2, 16), (3, 16), (4, 4), (5, 4), (6, 4), (7, 4), (8, 1)])
    full = classify_fractality(curve)
    steps = classify_fractality(curve, steps=True)
    assert abs(steps.d_b - 2.0) < 1e-9
    assert steps.label == 'fractal'
    assert full.r2_power < steps.r2_power
    with pytest.raises(InsufficientDataError):
        classify_fractality(NbCurve.from_points([(1, 8), (2, 4), (3, 4), (4, 4), (5, 1)]), steps=True)


@pytest.mark.commit
def test_classify_needs_four_points():
    with pytest.raises(InsufficientDataError):
        classify_fractality(NbCurve.from_points([(1, 8), (2, 4), (3, 1)]))


@pytest.mark.commit
def test_report_to_frame():
    frame = classify_fractality(NbCurve.from_points([(1, 64), (2, 16), (4, 4), (8, 1)])).to_frame()
    assert list(frame.columns) == ['d_b', 'r2_power', 'r2_exp', 'label']
    assert frame.loc[0, 'label'] == 'fractal'
