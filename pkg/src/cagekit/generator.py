"""Exhaustive generation of k-regular graphs with girth exactly g and no
(g+1)-cycles, on a fixed number of vertices.

The search seeds a Moore tree (every valid graph contains one), pads with
isolated vertices up to n, and then branches on one eligible vertex pair at a
time: either the edge is in the graph or it never will be.  Eligibility of a
pair only shrinks as edges are added, so invalid states are cut early; states
already seen up to isomorphism are cut through a canonical-form store.
Results are deduplicated and sorted by canonical form at the end, so the
output does not depend on dedup settings or worker count.
"""

from __future__ import annotations

import multiprocessing
import sys
import time
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

from . import _core, graph6
from .bounds import moore_bound, refined_lower_bound
from .canon import DedupStore
from .graph import Graph, girth, has_cycle_of_length, is_regular

# recursion depth where a multi-worker run splits the search tree
_SPLIT_DEPTH = 8


@dataclass(frozen=True)
class MooreTree:
    """The seed tree: BFS-numbered Moore ball plus isolated padding."""

    k: int
    g: int
    graph: Graph
    tree_order: int
    radius: int
    roots: Tuple[int, ...]


def build_moore_tree(k: int, g: int, n: Optional[int] = None) -> MooreTree:
    """Moore tree for (k, g) on n vertices (default: exactly the tree).

    Odd g: a vertex 0 with k subtrees, every internal vertex continuing with
    k-1 children, out to radius (g-1)/2.  Even g: an edge 01 with k-1
    subtrees per endpoint out to radius g/2-1.  Children get consecutive
    labels level by level, so the numbering is a BFS order.
    """
    if k < 3:
        raise ValueError("degree k must be at least 3")
    if g < 3:
        raise ValueError("girth g must be at least 3")
    order = moore_bound(k, g)
    if n is None:
        n = order
    if n < order:
        raise ValueError(f"need at least {order} vertices for the (k={k}, g={g}) tree")
    edges = []
    if g % 2:
        radius = (g - 1) // 2
        roots: Tuple[int, ...] = (0,)
        frontier = [0]
        nxt = 1
        for depth in range(radius):
            grown = []
            fan = k if depth == 0 else k - 1
            for v in frontier:
                for _ in range(fan):
                    edges.append((v, nxt))
                    grown.append(nxt)
                    nxt += 1
            frontier = grown
    else:
        radius = g // 2 - 1
        roots = (0, 1)
        edges.append((0, 1))
        frontier = [0, 1]
        nxt = 2
        for _ in range(radius):
            grown = []
            for v in frontier:
                for _ in range(k - 1):
                    edges.append((v, nxt))
                    grown.append(nxt)
                    nxt += 1
            frontier = grown
    assert nxt == order
    return MooreTree(k=k, g=g, graph=Graph(n, edges), tree_order=order, radius=radius, roots=roots)


def compute_eligible(graph: Graph, k: int, g: int) -> List[int]:
    """Bitmask per vertex of partners it could still be joined to.

    A pair is eligible when both degrees are below k, the edge is absent, the
    endpoints are at distance >= g-1 (no short cycle), and no simple path of
    exactly g edges joins them (no (g+1)-cycle).
    """
    n = graph.order
    return _core.backend_for(n).compute_eligible_raw(n, k, g, list(graph.adjacency_masks))


def is_valid_target(graph: Graph, k: int, g: int) -> bool:
    """k-regular, girth exactly g, and not a single (g+1)-cycle."""
    return is_regular(graph, k) and girth(graph) == g and not has_cycle_of_length(graph, g + 1)


@dataclass
class GenerationReport:
    n: int
    k: int
    g: int
    graphs: List[Graph]
    searched: bool
    nodes: int
    elapsed: float
    backend: str
    notes: List[str] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.graphs)


def _worker_run(args):
    n, k, g, adj, elig, m, dedup, cap = args
    kern = _core.backend_for(n)
    store = DedupStore(cap) if dedup else None
    forms: List[bytes] = []
    notes: List[str] = []
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 3000 + n * n))
    _, stats = kern.generate_core(n, k, g, adj, elig, m, store, forms.append, None, notes.append)
    return forms, stats["nodes"], notes


def generate_all(
    n: int,
    k: int,
    g: int,
    *,
    dedup: bool = True,
    workers: int = 1,
    trust_bounds: bool = True,
    emit: Optional[Callable[[Graph], None]] = None,
    dedup_cap: Optional[int] = None,
) -> GenerationReport:
    """Every k-regular graph on n vertices with girth g and no (g+1)-cycle,
    one representative per isomorphism class, sorted by canonical form.

    With trust_bounds (default) an n below the known lower bound returns
    empty without searching; pass trust_bounds=False to run the search
    anyway, e.g. to certify emptiness independently.  dedup only affects
    speed, never the result set.  workers > 1 splits the search tree across
    processes; output order is still deterministic.
    """
    if k < 3:
        raise ValueError("degree k must be at least 3")
    if g < 3:
        raise ValueError("girth g must be at least 3")
    if n < 1:
        raise ValueError("vertex count must be positive")
    t0 = time.perf_counter()
    notes: List[str] = []
    backend = _core.backend_name(n)

    def report(graphs: List[Graph], searched: bool, nodes: int) -> GenerationReport:
        return GenerationReport(
            n=n, k=k, g=g, graphs=graphs, searched=searched, nodes=nodes,
            elapsed=time.perf_counter() - t0, backend=backend, notes=notes,
        )

    if (n * k) % 2:
        notes.append("no graph exists: n*k is odd")
        return report([], False, 0)
    mb = moore_bound(k, g)
    if n < mb:
        notes.append(f"no graph exists: n is below the tree-counting bound {mb}")
        return report([], False, 0)
    if g % 2 and trust_bounds:
        rb = refined_lower_bound(k, g)
        if n < rb.final:
            notes.append(f"skipped search: n is below the lower bound {rb.final}")
            return report([], False, 0)

    seed = build_moore_tree(k, g, n)
    adj0 = list(seed.graph.adjacency_masks)
    kern = _core.backend_for(n)
    elig0 = kern.compute_eligible_raw(n, k, g, adj0)
    m0 = seed.graph.num_edges
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 3000 + n * n))

    def note_once(msg: str):
        if msg not in notes:
            notes.append(msg)

    forms: List[bytes] = []
    store = DedupStore(dedup_cap) if dedup else None
    if workers <= 1:
        _, stats = kern.generate_core(n, k, g, adj0, elig0, m0, store, forms.append, None, note_once)
        nodes = stats["nodes"]
    else:
        frontier, stats = kern.generate_core(
            n, k, g, adj0, elig0, m0, store, forms.append, _SPLIT_DEPTH, note_once
        )
        nodes = stats["nodes"]
        jobs = [(n, k, g, adj, elig, m, dedup, dedup_cap) for (adj, elig, m) in frontier]
        if jobs:
            with multiprocessing.Pool(workers) as pool:
                for wforms, wnodes, wnotes in pool.imap_unordered(_worker_run, jobs):
                    forms.extend(wforms)
                    nodes += wnodes
                    for msg in wnotes:
                        note_once(msg)

    uniq = sorted(set(forms))
    graphs = [graph6.decode(f) for f in uniq]
    if emit is not None:
        for gr in graphs:
            emit(gr)
    return report(graphs, True, nodes)
