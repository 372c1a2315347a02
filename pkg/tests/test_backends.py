"""The compiled kernel and the pure-Python kernel must agree byte for byte."""

import random

import pytest

from cagekit._core import HAVE_FAST, backend_for, backend_name, pure

if HAVE_FAST:
    from cagekit._core import _fast
else:
    _fast = None

pytestmark = pytest.mark.skipif(not HAVE_FAST, reason="compiled backend not built")


def random_masks(n, p, rng):
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return adj


def test_backend_selection(monkeypatch):
    assert backend_name(10) == "fast"
    assert backend_name(64) == "fast"
    assert backend_name(65) == "pure"
    monkeypatch.setenv("CAGEKIT_PURE", "1")
    assert backend_name(10) == "pure"
    assert backend_for(10) is pure


def test_canonical_form_bytes_match():
    rng = random.Random(1)
    for _ in range(400):
        n = rng.randrange(1, 20)
        adj = random_masks(n, rng.choice([0.1, 0.3, 0.6, 0.9]), rng)
        assert pure.canonical_form(n, adj) == _fast.canonical_form(n, adj), (n, adj)


def test_canonical_form_bytes_match_word_boundary():
    rng = random.Random(2)
    for n in (31, 32, 33, 63, 64):
        for _ in range(10):
            adj = random_masks(n, 0.08, rng)
            assert pure.canonical_form(n, adj) == _fast.canonical_form(n, adj), n


def test_canonical_form_with_cells():
    rng = random.Random(3)
    for _ in range(150):
        n = rng.randrange(2, 12)
        adj = random_masks(n, 0.4, rng)
        v = rng.randrange(n)
        cells = [[v], [u for u in range(n) if u != v]]
        assert pure.canonical_form(n, adj, cells) == _fast.canonical_form(n, adj, cells)


def test_scalar_queries_match():
    rng = random.Random(4)
    for _ in range(300):
        n = rng.randrange(1, 16)
        adj = random_masks(n, rng.choice([0.15, 0.35, 0.7]), rng)
        assert pure.girth_of(n, adj) == _fast.girth_of(n, adj)
        for L in range(3, min(n, 9) + 1):
            assert pure.has_cycle_len(n, adj, L) == _fast.has_cycle_len(n, adj, L)
        src = rng.randrange(n)
        assert pure.bfs_dists(n, adj, src) == _fast.bfs_dists(n, adj, src)


def test_eligibility_kernels_match():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randrange(4, 14)
        k = rng.choice([3, 4])
        g = rng.choice([3, 4, 5])
        adj = random_masks(n, 0.2, rng)
        ep = pure.compute_eligible_raw(n, k, g, adj)
        ef = _fast.compute_eligible_raw(n, k, g, adj)
        assert ep == ef, (n, k, g, adj)
        # grow by one eligible edge and compare the incremental update
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if ep[a] >> b & 1]
        if not pairs:
            continue
        a, b = rng.choice(pairs)
        deg = [bin(m).count("1") for m in adj]
        adj2 = adj[:]
        adj2[a] |= 1 << b
        adj2[b] |= 1 << a
        deg[a] += 1
        deg[b] += 1
        up = pure.update_eligible(n, k, g, adj2, deg, ep, a, b)
        uf = _fast.update_eligible(n, k, g, adj2, deg, ef, a, b)
        assert up == uf


class ListStore:
    def __init__(self):
        self.seen = set()

    def insert_if_new(self, form):
        if form in self.seen:
            return False
        self.seen.add(form)
        return True


def run_generate(kern, n, k, g):
    from cagekit.generator import build_moore_tree

    mt = build_moore_tree(k, g, n=n)
    adj0 = list(mt.graph.adjacency_masks)
    elig0 = kern.compute_eligible_raw(n, k, g, adj0)
    m0 = mt.graph.num_edges
    out = []
    frontier, stats = kern.generate_core(n, k, g, adj0, elig0, m0, ListStore(), out.append)
    return sorted(out), stats["nodes"], frontier


@pytest.mark.parametrize("n,k,g", [(10, 3, 3), (6, 3, 4), (12, 3, 4), (12, 3, 5), (10, 4, 3)])
def test_generate_core_identical_output(n, k, g):
    forms_p, nodes_p, _ = run_generate(pure, n, k, g)
    forms_f, nodes_f, _ = run_generate(_fast, n, k, g)
    assert forms_p == forms_f
    assert nodes_p == nodes_f


def frontier_states(kern, n, k, g, depth):
    from cagekit.generator import build_moore_tree

    mt = build_moore_tree(k, g, n=n)
    adj0 = list(mt.graph.adjacency_masks)
    elig0 = kern.compute_eligible_raw(n, k, g, adj0)
    out = []
    frontier, _ = kern.generate_core(
        n, k, g, adj0, elig0, mt.graph.num_edges, ListStore(), out.append, frontier_depth=depth
    )
    key = lambda st: (tuple(st[0]), tuple(st[1]), st[2])
    return sorted(key(st) for st in frontier), sorted(out)


@pytest.mark.parametrize("depth", [2, 5])
def test_frontier_split_identical(depth):
    fp, outp = frontier_states(pure, 10, 3, 3, depth)
    ff, outf = frontier_states(_fast, 10, 3, 3, depth)
    assert fp == ff
    assert outp == outf


def test_flat_enumeration_identical():
    for n, k in [(6, 3), (8, 3), (7, 4)]:
        got_p, got_f = [], []
        tp = pure.all_regular_core(n, k, lambda adj: got_p.append(tuple(adj)))
        tf = _fast.all_regular_core(n, k, lambda adj: got_f.append(tuple(adj)))
        assert tp == tf
        assert sorted(got_p) == sorted(got_f)


def test_flat_enumeration_filters_identical():
    for g in (3, 4, 5):
        got_p, got_f = [], []
        tp = pure.all_regular_core(8, 3, lambda adj: got_p.append(tuple(adj)),
                                   require_girth=g, forbid_cycle_len=g + 1)
        tf = _fast.all_regular_core(8, 3, lambda adj: got_f.append(tuple(adj)),
                                    require_girth=g, forbid_cycle_len=g + 1)
        assert tp == tf
        assert sorted(got_p) == sorted(got_f)


def test_flat_enumeration_girth_floor_identical():
    got_p, got_f = [], []
    pure.all_regular_core(10, 3, lambda adj: got_p.append(tuple(adj)), girth_floor=5)
    _fast.all_regular_core(10, 3, lambda adj: got_f.append(tuple(adj)), girth_floor=5)
    assert sorted(got_p) == sorted(got_f)
    # the only cubic girth>=5 graph on 10 vertices is Petersen: 10!/|Aut| labelings
    assert len(got_p) == 30240
