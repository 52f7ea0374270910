"""Vertex orders, weak reachability, and the separation certificate."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import cycle_graph, grid_graph, path_graph, random_connected, star_graph
from lkcds.domination import ContractViolation
from lkcds.graphs import Graph
from lkcds.orders import (
    OrderedGraph,
    check_separation,
    exact_wcol,
    heuristic_order,
    product_order,
    wreach_report,
)


def test_ordered_graph_validates_permutation():
    g = path_graph(3)
    with pytest.raises(ValueError):
        OrderedGraph(g, [0, 1])
    with pytest.raises(ValueError):
        OrderedGraph(g, [0, 0, 2])
    og = OrderedGraph(g, [2, 0, 1])
    assert og.pos[2] == 0 and og.pos[1] == 2


def test_wreach_identity_order_on_path():
    # with the identity order, a vertex weakly reaches the s ids before it
    p5 = path_graph(5)
    og = OrderedGraph(p5, range(5))
    sets = og.wreach(2)
    assert sets[0] == (0,)
    assert sets[2] == (0, 1, 2)
    assert sets[4] == (2, 3, 4)
    assert og.wcol(2) == 3


def test_wreach_zero_is_self_only():
    g = grid_graph(2, 3)
    og = heuristic_order(g)
    assert all(w == (v,) for v, w in enumerate(og.wreach(0)))


def test_wreach_monotone_in_radius():
    g = random_connected(10, 3, 11)
    og = heuristic_order(g)
    for s in (1, 2, 3):
        small = og.wreach(s - 1)
        large = og.wreach(s)
        for v in range(g.n):
            assert set(small[v]) <= set(large[v])


def test_exact_wcol_on_known_graphs():
    assert exact_wcol(path_graph(5), 1)[0] == 2
    assert exact_wcol(cycle_graph(6), 2)[0] == 3
    value, order = exact_wcol(star_graph(5), 3)
    assert value == 2
    # the optimum puts the hub first
    assert order[0] == 0
    with pytest.raises(ValueError):
        exact_wcol(path_graph(9), 1)


@given(st.integers(0, 2_000))
@settings(max_examples=30)
def test_heuristics_never_beat_exact(seed):
    g = random_connected(7, 2, seed)
    best, _ = exact_wcol(g, 2)
    for kind in ("degeneracy", "bfs", "random"):
        og = heuristic_order(g, kind=kind, seed=0)
        assert og.wcol(2) >= best


def test_wreach_report_witness():
    og = OrderedGraph(path_graph(5), range(5))
    rep = wreach_report(og, 2)
    assert rep.value == 3
    assert rep.sizes[rep.witness] == 3


def test_check_separation_accepts_real_paths():
    g = cycle_graph(8)
    og = heuristic_order(g)
    z = check_separation(og, [0], 2, [0, 1, 2], 2)
    assert z in (0, 1, 2)


def test_check_separation_validates_input():
    g = path_graph(6)
    og = OrderedGraph(g, range(6))
    with pytest.raises(ValueError):
        check_separation(og, [0], 3, [0, 1, 2, 3], 2)  # too long for r=2
    with pytest.raises(ValueError):
        check_separation(og, [5], 2, [0, 1, 2], 2)  # starts outside blockers
    with pytest.raises(ValueError):
        check_separation(og, [0], 4, [0, 1, 2], 2)  # wrong endpoint
    with pytest.raises(ValueError):
        check_separation(og, [0], 1, [0, 2, 1], 2)  # not a path


@given(st.integers(0, 3_000))
@settings(max_examples=60)
def test_separator_exists_on_every_short_path(seed):
    # leftmost vertex of any <=r-path is weakly r-reachable from both ends
    g = random_connected(9, 3, seed)
    og = heuristic_order(g, kind="bfs")
    r = 3
    from lkcds.graphs import bfs_layers

    res = bfs_layers(g, [0], depth_cap=r)
    for v, d in res.dist.items():
        if v == 0 or d > r:
            continue
        path = res.path_to(v)
        z = check_separation(og, [0], v, path, r)
        assert z in path


def test_product_order_bound():
    base = heuristic_order(cycle_graph(6))
    h = Graph.from_edges(3, [(0, 1), (1, 2)])
    prod = product_order(base, h)
    for s in (1, 2):
        assert prod.wcol(s) <= h.n * base.wcol(s)
    assert prod.graph.n == 18
