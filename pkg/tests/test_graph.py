"""Graph type and cycle queries, checked against the subset-enumeration oracles."""

import math

import pytest

from cagekit.graph import (
    Graph,
    connected_components,
    cycles_of_length,
    distance,
    girth,
    has_cycle_of_length,
    is_bipartite,
    is_connected,
    is_regular,
    odd_girth,
    shortest_cycle,
)
from cagekit.fixtures import complete_bipartite, complete_graph, cycle_graph, petersen

import naive


def all_small_graphs(max_n):
    for n in range(1, max_n + 1):
        for edges in naive.all_labeled_graphs(n):
            yield Graph(n, edges)


# the n<=5 sweep is 1 + 2 + 8 + 64 + 1024 graphs; n=6 adds 32768 and is still fast
SWEEP_N = 6


def test_girth_matches_oracle_exhaustive():
    for g in all_small_graphs(SWEEP_N):
        assert girth(g) == naive.girth(g), sorted(g.edges())


def test_cycle_queries_match_oracle_exhaustive():
    for g in all_small_graphs(5):
        for L in range(3, g.order + 1):
            assert has_cycle_of_length(g, L) == naive.has_cycle_len(g, L), (sorted(g.edges()), L)


def test_odd_girth_and_bipartite_match_oracle():
    for g in all_small_graphs(SWEEP_N):
        assert is_bipartite(g) == naive.is_bipartite(g), sorted(g.edges())
        assert odd_girth(g) == naive.odd_girth(g), sorted(g.edges())


def test_bipartite_iff_infinite_odd_girth():
    for g in all_small_graphs(5):
        assert is_bipartite(g) == (odd_girth(g) == math.inf)


def test_cycles_of_length_listing():
    k4 = complete_graph(4)
    tris = list(cycles_of_length(k4, 3))
    assert len(tris) == 4
    quads = list(cycles_of_length(k4, 4))
    assert len(quads) == 3
    for cyc in tris + quads:
        for i in range(len(cyc)):
            assert k4.has_edge(cyc[i], cyc[(i + 1) % len(cyc)])
    # one orientation, anchored at the smallest vertex
    assert all(c[0] == min(c) and c[1] < c[-1] for c in quads)


def test_cycles_of_length_counts_match_oracle():
    for g in all_small_graphs(5):
        for L in range(3, g.order + 1):
            ours = list(cycles_of_length(g, L))
            assert len(ours) == len(naive.cycles_by_arrangement(g, L))
            assert len(set(ours)) == len(ours)


def test_shortest_cycle_witness():
    g = petersen()
    res = shortest_cycle(g)
    assert res.length == 5
    cyc = res.witness
    assert len(cyc) == 5
    for i in range(5):
        assert g.has_edge(cyc[i], cyc[(i + 1) % 5])
    empty = shortest_cycle(Graph(4, [(0, 1), (1, 2)]))
    assert empty.length == math.inf and empty.witness is None


def test_girth_of_acyclic_is_infinite():
    assert girth(Graph(5, [(0, 1), (1, 2)])) == math.inf
    assert girth(Graph(3, [])) == math.inf


@pytest.mark.parametrize("n", [3, 4, 5, 8, 13])
def test_cycle_graph_girth(n):
    assert girth(cycle_graph(n)) == n


def test_distance():
    c6 = cycle_graph(6)
    assert distance(c6, 0, 3) == 3
    assert distance(c6, 0, 0) == 0
    assert distance(Graph(4, [(0, 1), (2, 3)]), 0, 3) == math.inf


def test_connectivity_helpers():
    g = Graph(6, [(0, 1), (1, 2), (3, 4)])
    assert not is_connected(g)
    assert connected_components(g) == [[0, 1, 2], [3, 4], [5]]
    assert is_connected(cycle_graph(4))


def test_is_regular():
    assert is_regular(petersen(), 3)
    assert not is_regular(petersen(), 4)
    assert not is_regular(Graph(3, [(0, 1)]), 1)
    assert is_regular(complete_bipartite(3, 3), 3)


def test_graph_constructor_validation():
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(-1, [])
    # duplicate edges collapse
    assert Graph(3, [(0, 1), (1, 0)]).num_edges == 1


def test_graph_equality_and_relabel():
    g = Graph(4, [(0, 1), (2, 3)])
    assert g.relabel([0, 1, 2, 3]) == g
    swapped = g.relabel([1, 0, 3, 2])
    assert swapped == g  # same edge set after swapping within the pairs
    assert g.relabel([2, 1, 0, 3]) == Graph(4, [(2, 1), (0, 3)])


def test_with_edge_and_without_vertices():
    g = Graph(4, [(0, 1)])
    g2 = g.with_edge(2, 3)
    assert g2.has_edge(2, 3) and not g.has_edge(2, 3)
    h = cycle_graph(5).without_vertices([2])
    assert h.order == 4
    assert sorted(h.edges()) == [(0, 1), (0, 3), (2, 3)]


def test_has_cycle_of_length_rejects_short():
    with pytest.raises(ValueError):
        has_cycle_of_length(cycle_graph(5), 2)
