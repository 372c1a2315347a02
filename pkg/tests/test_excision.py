"""Cycle excision: removing an adjacent pair on a girth cycle and rewiring."""

import itertools

import pytest

from cagekit import girth, is_valid_target
from cagekit.excision import iter_reductions, reduce_by_cycle
from cagekit.graph import cycles_of_length, has_cycle_of_length, is_regular
from cagekit.fixtures import (
    cubic_cage_g7,
    cycle_graph,
    generalized_petersen,
    heawood,
    petersen,
    tricorn,
)


def test_gp92_single_reduction():
    gp = generalized_petersen(9, 2)
    small = reduce_by_cycle(gp)
    assert small.order == 16
    assert is_valid_target(small, 3, 3)


def test_gp92_every_choice_is_valid():
    """All cycle / ordered-pair / pairing combinations give a 16-vertex graph
    that is cubic with girth 3 and no 4-cycle."""
    gp = generalized_petersen(9, 2)
    count = 0
    for small in iter_reductions(gp):
        assert small.order == 16
        assert is_valid_target(small, 3, 3)
        count += 1
    # 9 girth cycles, 5 edges each, both orientations, 1! pairings
    assert count == 90


def test_explicit_choice_arguments():
    gp = generalized_petersen(9, 2)
    cyc = next(cycles_of_length(gp, 5))
    small = reduce_by_cycle(gp, cycle=cyc, pair=(cyc[1], cyc[2]), pairing=(0,))
    assert small.order == 16
    assert is_valid_target(small, 3, 3)


def test_regularity_and_size_preserved():
    gp = generalized_petersen(9, 2)
    small = reduce_by_cycle(gp)
    assert is_regular(small, 3)
    assert small.num_edges == gp.num_edges - 3


def test_petersen_reduction_shows_why_no_six_cycles_matters():
    # Petersen has girth 5 but also 6-cycles; excision still runs, yet some
    # choice leaves a 4-cycle (otherwise an 8-vertex graph would beat the
    # 10-vertex minimum for cubic girth 3 without 4-cycles)
    pete = petersen()
    smalls = list(iter_reductions(pete))
    assert all(s.order == 8 and is_regular(s, 3) and girth(s) == 3 for s in smalls)
    assert any(has_cycle_of_length(s, 4) for s in smalls)
    assert not any(is_valid_target(s, 3, 3) for s in smalls)


@pytest.mark.extended
def test_girth_seven_cage_reduces_to_girth_five():
    g7 = cubic_cage_g7()
    seen_orders = set()
    for small in itertools.islice(iter_reductions(g7), 60):
        assert small.order == 34
        assert is_valid_target(small, 3, 5)
        seen_orders.add(small.order)
    assert seen_orders == {34}


def test_girth_seven_cage_single_reduction():
    small = reduce_by_cycle(cubic_cage_g7())
    assert small.order == 34
    assert is_valid_target(small, 3, 5)


def test_rejects_small_girth():
    with pytest.raises(ValueError):
        reduce_by_cycle(tricorn())  # girth 3
    with pytest.raises(ValueError):
        reduce_by_cycle(cycle_graph(4))


def test_heawood_reduction():
    # girth 6 is allowed (only girth >= 5 is required); result has girth 4
    small = reduce_by_cycle(heawood())
    assert small.order == 12
    assert is_regular(small, 3)
    assert girth(small) == 4


def test_bad_cycle_arguments():
    gp = generalized_petersen(9, 2)
    with pytest.raises(ValueError):
        reduce_by_cycle(gp, cycle=(0, 1, 2, 3))  # not length girth
    cyc = next(cycles_of_length(gp, 5))
    with pytest.raises(ValueError):
        reduce_by_cycle(gp, cycle=cyc, pair=(cyc[0], cyc[2]))  # not a cycle edge
    with pytest.raises(ValueError):
        reduce_by_cycle(gp, cycle=cyc, pairing=(1,))  # not a permutation of range(1)


def test_cycle_vertices_validated():
    gp = generalized_petersen(9, 2)
    with pytest.raises(ValueError):
        reduce_by_cycle(gp, cycle=(0, 0, 1, 2, 3))
