"""Every fixture is property-verified here; none is trusted by construction."""

import math

import pytest

from cagekit import (
    canonical_form,
    canonical_graph,
    cyclic_group,
    girth,
    graph6,
    is_isomorphic,
    is_valid_target,
    k13loop_assignment,
    vertex_orbits,
    voltage_lift,
)
from cagekit.graph import (
    has_cycle_of_length,
    is_bipartite,
    is_connected,
    is_regular,
    odd_girth,
)
from cagekit.fixtures import (
    campbell,
    complete_bipartite,
    complete_graph,
    cubic_cage_g7,
    cubic_record_g9,
    cycle_graph,
    data_path,
    generalized_petersen,
    heawood,
    lcf_graph,
    line_graph,
    load_shipped,
    petersen,
    quartic_15,
    tricorn,
    tricorn_mate,
)


def test_basic_constructors():
    assert complete_graph(5).num_edges == 10
    assert cycle_graph(6).num_edges == 6
    assert complete_bipartite(2, 3).num_edges == 6
    assert is_bipartite(complete_bipartite(4, 4))


def test_petersen_properties():
    p = petersen()
    assert p.order == 10 and is_regular(p, 3)
    assert girth(p) == 5
    assert has_cycle_of_length(p, 6)
    assert len(vertex_orbits(p)) == 1


def test_gp_family():
    assert is_isomorphic(generalized_petersen(5, 2), petersen())
    gp = generalized_petersen(9, 2)
    assert gp.order == 18 and is_regular(gp, 3)
    assert is_valid_target(gp, 3, 5)
    with pytest.raises(ValueError):
        generalized_petersen(4, 2)  # 2j must differ from 0 mod n


def test_lcf_heawood():
    h = lcf_graph(14, [5, -5])
    assert is_isomorphic(h, heawood())
    assert girth(h) == 6 and is_bipartite(h)


def test_tricorn_is_a_target():
    t = tricorn()
    assert t.order == 10 and is_regular(t, 3)
    assert is_valid_target(t, 3, 3)
    assert sorted(len(o) for o in vertex_orbits(t)) == [1, 3, 6]


def test_tricorn_mate_is_a_target_and_distinct():
    m = tricorn_mate()
    assert m.order == 10 and is_regular(m, 3)
    assert is_valid_target(m, 3, 3)
    assert len(vertex_orbits(m)) == 3
    assert not is_isomorphic(m, tricorn())


def test_line_graph_small_identities():
    from cagekit.graph import Graph

    assert is_isomorphic(line_graph(cycle_graph(5)), cycle_graph(5))
    # the line graph of K4 is the octahedron (all pairs except three antipodal ones)
    lk4 = line_graph(complete_graph(4))
    anti = {(0, 1), (2, 3), (4, 5)}
    octa = Graph(6, [(u, v) for u in range(6) for v in range(u + 1, 6) if (u, v) not in anti])
    assert is_isomorphic(lk4, octa)


def test_line_graph_of_petersen_is_a_target():
    lp = line_graph(petersen())
    assert lp.order == 15 and is_regular(lp, 4)
    assert is_valid_target(lp, 4, 3)
    assert len(vertex_orbits(lp)) == 1


def test_quartic_15_is_a_target_and_distinct():
    q = quartic_15()
    assert q.order == 15 and is_regular(q, 4)
    assert is_valid_target(q, 4, 3)
    assert len(vertex_orbits(q)) == 3
    assert not is_isomorphic(q, line_graph(petersen()))


def test_heawood_properties():
    h = heawood()
    assert h.order == 14 and is_regular(h, 3)
    assert is_valid_target(h, 3, 6)
    assert odd_girth(h) == math.inf


def test_campbell_properties():
    c = campbell()
    assert c.order == 28 and is_regular(c, 3)
    assert is_connected(c)
    assert girth(c) == 6
    assert not has_cycle_of_length(c, 7)
    assert is_valid_target(c, 3, 6)
    assert odd_girth(c) == 11


def test_shipped_cages_match_their_lifts():
    g7 = cubic_cage_g7()
    assert is_valid_target(g7, 3, 7)
    built = voltage_lift(k13loop_assignment(cyclic_group(9), (1, 2, 4)))
    assert is_isomorphic(g7, built)

    g9 = cubic_record_g9()
    assert is_valid_target(g9, 3, 9)
    built = voltage_lift(k13loop_assignment(cyclic_group(19), (1, 7, 8)))
    assert is_isomorphic(g9, built)


def test_shipped_cage_orbits():
    assert len(vertex_orbits(cubic_cage_g7())) == 2
    assert len(vertex_orbits(cubic_record_g9())) == 2


SNAPSHOTS = {
    "tricorn.g6": tricorn,
    "tricorn_mate.g6": tricorn_mate,
    "gp_9_2.g6": lambda: generalized_petersen(9, 2),
    "lg_petersen.g6": lambda: line_graph(petersen()),
    "quartic_15.g6": quartic_15,
    "campbell.g6": campbell,
}


@pytest.mark.parametrize("name", sorted(SNAPSHOTS))
def test_snapshots_match_constructors(name):
    stored = load_shipped(name)
    assert is_isomorphic(stored, SNAPSHOTS[name]())


@pytest.mark.parametrize(
    "name",
    ["tricorn.g6", "tricorn_mate.g6", "gp_9_2.g6", "lg_petersen.g6",
     "quartic_15.g6", "campbell.g6", "cubic_g7_36.g6", "cubic_g9_76.g6"],
)
def test_snapshots_stored_in_canonical_form(name):
    line = data_path(name).read_text().strip()
    g = graph6.decode(line)
    assert graph6.encode(canonical_graph(g)) == line
    assert is_connected(g)
