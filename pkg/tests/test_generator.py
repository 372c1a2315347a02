"""Exhaustive generation: oracle equivalence on small orders, known cages,
determinism knobs."""

import math

import pytest

from cagekit import (
    canonical_form,
    generate_all,
    girth,
    is_isomorphic,
    is_valid_target,
    moore_bound,
)
from cagekit._core import HAVE_FAST, pure
from cagekit.generator import build_moore_tree, compute_eligible
from cagekit.graph import Graph
from cagekit.fixtures import (
    complete_bipartite,
    generalized_petersen,
    heawood,
    line_graph,
    petersen,
    quartic_15,
    tricorn,
    tricorn_mate,
)

import naive


def oracle_count(n, k, g):
    """Isomorphism classes of k-regular girth-g graphs on n vertices without a
    (g+1)-cycle, by filtering every labeled k-regular graph."""
    survivors = []
    for edges in naive.regular_edge_sets(n, k):
        gr = Graph(n, edges)
        if naive.girth(gr) != g:
            continue
        if n >= g + 1 and naive.has_cycle_len(gr, g + 1):
            continue
        survivors.append(gr)
    return len(naive.iso_classes(survivors))


@pytest.mark.parametrize("n", [4, 6, 8])
@pytest.mark.parametrize("g", [3, 4, 5])
def test_oracle_equivalence_cubic(n, g):
    want = oracle_count(n, 3, g)
    rep = generate_all(n, 3, g, trust_bounds=False)
    assert rep.count == want, (n, g, want)


@pytest.mark.parametrize("n,g", [(5, 3), (6, 3), (7, 3), (6, 4), (7, 4)])
def test_oracle_equivalence_quartic(n, g):
    want = oracle_count(n, 4, g)
    rep = generate_all(n, 4, g, trust_bounds=False)
    assert rep.count == want, (n, g, want)


def semi_oracle_count(n, k, g, girth_floor=None):
    """Same filter run through the flat pair-by-pair enumerator, which shares
    no search logic with the targeted generator."""
    from cagekit._core import backend_for

    kern = backend_for(n)
    hits = []
    kern.all_regular_core(
        n, k, hits.append, girth_floor=girth_floor, require_girth=g, forbid_cycle_len=g + 1
    )
    return len({canonical_form(Graph._from_masks(n, adj)) for adj in hits})


@pytest.mark.skipif(not HAVE_FAST, reason="needs the compiled backend")
def test_oracle_equivalence_cubic_order_ten():
    # 11.7M labeled cubic graphs, in-kernel filtered
    for g in (3, 4, 5):
        want = semi_oracle_count(10, 3, g)
        assert generate_all(10, 3, g, trust_bounds=False).count == want


@pytest.mark.extended
@pytest.mark.skipif(not HAVE_FAST, reason="needs the compiled backend")
@pytest.mark.parametrize("n,g", [(12, 4), (12, 5), (14, 4), (14, 5)])
def test_oracle_equivalence_cubic_girth_floor(n, g):
    # with a girth floor the flat enumeration stays feasible at n = 12, 14
    want = semi_oracle_count(n, 3, g, girth_floor=g)
    assert generate_all(n, 3, g, trust_bounds=False).count == want


def test_cubic_cage_pair_order_ten():
    rep = generate_all(10, 3, 3)
    assert rep.count == 2
    found = {canonical_form(g) for g in rep.graphs}
    assert found == {canonical_form(tricorn()), canonical_form(tricorn_mate())}
    for g in rep.graphs:
        assert is_valid_target(g, 3, 3)


def test_girth_four_cage_is_k33():
    rep = generate_all(6, 3, 4)
    assert rep.count == 1
    assert is_isomorphic(rep.graphs[0], complete_bipartite(3, 3))


def test_girth_five_cage_is_gp92():
    rep = generate_all(18, 3, 5)
    assert rep.count == 1
    assert is_isomorphic(rep.graphs[0], generalized_petersen(9, 2))


def test_girth_six_cage_is_heawood():
    rep = generate_all(14, 3, 6)
    assert rep.count == 1
    assert is_isomorphic(rep.graphs[0], heawood())


def test_nothing_below_eighteen_for_girth_five():
    assert generate_all(16, 3, 5, trust_bounds=False).count == 0


@pytest.mark.extended
def test_quartic_cage_pair_order_fifteen():
    rep = generate_all(15, 4, 3)
    assert rep.count == 2
    found = {canonical_form(g) for g in rep.graphs}
    assert found == {canonical_form(line_graph(petersen())), canonical_form(quartic_15())}


@pytest.mark.extended
def test_nothing_below_fifteen_for_quartic():
    assert generate_all(14, 4, 3, trust_bounds=False).count == 0


def test_parity_note():
    rep = generate_all(7, 3, 3)
    assert rep.count == 0
    assert any("odd" in note for note in rep.notes)
    assert rep.nodes == 0


def test_below_moore_note():
    rep = generate_all(4, 3, 5, trust_bounds=False)
    assert rep.count == 0
    assert any("tree-counting" in note for note in rep.notes)


def test_trusted_bound_skips_search():
    rep = generate_all(6, 3, 3)
    assert rep.count == 0
    assert any("below the lower bound" in note for note in rep.notes)
    assert rep.nodes == 0
    # the same order searched explicitly still gives zero
    assert generate_all(6, 3, 3, trust_bounds=False).count == 0


def test_dedup_off_same_result():
    on = generate_all(10, 3, 3)
    off = generate_all(10, 3, 3, dedup=False)
    assert [canonical_form(g) for g in on.graphs] == [canonical_form(g) for g in off.graphs]
    assert off.nodes >= on.nodes


def test_tiny_dedup_cap_falls_back():
    rep = generate_all(10, 3, 3, dedup_cap=2)
    assert rep.count == 2
    assert any("dedup store is full" in note for note in rep.notes)


def test_workers_match_single():
    one = generate_all(10, 3, 3, workers=1)
    two = generate_all(10, 3, 3, workers=2)
    assert [canonical_form(g) for g in one.graphs] == [canonical_form(g) for g in two.graphs]


def test_emit_callback():
    got = []
    rep = generate_all(10, 3, 3, emit=got.append)
    assert len(got) == rep.count == 2


def test_output_sorted_and_unique():
    rep = generate_all(10, 3, 3)
    forms = [canonical_form(g) for g in rep.graphs]
    assert forms == sorted(forms)
    assert len(set(forms)) == len(forms)


def test_report_metadata():
    rep = generate_all(10, 3, 3)
    assert (rep.n, rep.k, rep.g) == (10, 3, 3)
    assert rep.backend in ("fast", "pure")
    assert rep.nodes > 0
    assert rep.elapsed >= 0


def test_rejects_bad_parameters():
    with pytest.raises(ValueError):
        generate_all(10, 2, 3)
    with pytest.raises(ValueError):
        generate_all(10, 3, 2)
    with pytest.raises(ValueError):
        generate_all(0, 3, 3)


def test_moore_tree_shape_odd_girth():
    mt = build_moore_tree(3, 5)
    g = mt.graph
    assert mt.tree_order == moore_bound(3, 5) == g.order == 10
    assert mt.roots == (0,)
    assert g.num_edges == g.order - 1  # a tree
    assert girth(g) == math.inf
    assert g.degree(0) == 3
    assert max(g.degrees()) <= 3


def test_moore_tree_shape_even_girth():
    mt = build_moore_tree(3, 6)
    g = mt.graph
    assert mt.tree_order == moore_bound(3, 6) == 14
    assert mt.roots == (0, 1)
    assert g.has_edge(0, 1)
    assert g.num_edges == g.order - 1


def test_moore_tree_padding():
    mt = build_moore_tree(3, 5, n=12)
    assert mt.graph.order == 12
    assert mt.graph.degree(11) == 0


def test_is_valid_target_spot_checks():
    assert is_valid_target(tricorn(), 3, 3)
    assert not is_valid_target(petersen(), 3, 5)  # has 6-cycles
    assert not is_valid_target(tricorn(), 3, 4)
    assert not is_valid_target(complete_bipartite(3, 3), 4, 4)


def test_eligible_pairs_on_seed():
    mt = build_moore_tree(3, 3, n=10)
    elig = compute_eligible(mt.graph, 3, 3)
    # tree edges are not eligible, only non-edges between degree-deficient vertices
    for (u, v) in mt.graph.edges():
        assert not elig[u] >> v & 1
    # the root already has full degree
    assert elig[0] == 0
