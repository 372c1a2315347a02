"""Girth reduction by excising an edge of a shortest cycle.

Given a graph of girth h >= 5 and an edge uv on a girth cycle, delete u and
v and reconnect their leftover neighbors by a matching; joining the two
cycle neighbors x1 (of u) and y1 (of v) closes the cut cycle into one of
length h-2.  Applied to a k-regular graph of girth h with no (h+1)-cycle
this yields a k-regular graph of girth h-2 with no (h-1)-cycle, two
vertices smaller.
"""

from __future__ import annotations

import math
from itertools import permutations
from typing import Iterator, Optional, Sequence, Tuple

from .graph import Graph, cycles_of_length, girth


def _cycle_neighbors(cycle: Tuple[int, ...], v: int) -> Tuple[int, int]:
    i = cycle.index(v)
    return cycle[i - 1], cycle[(i + 1) % len(cycle)]


def reduce_by_cycle(
    graph: Graph,
    cycle: Optional[Sequence[int]] = None,
    pair: Optional[Tuple[int, int]] = None,
    pairing: Optional[Sequence[int]] = None,
) -> Graph:
    """Excise one edge of a girth cycle and rewire; returns the smaller graph.

    cycle defaults to the lexicographically least girth cycle, pair to its
    first edge (ordered: first vertex plays the x side).  pairing permutes
    the non-cycle neighbors of the second vertex before matching them with
    those of the first; the two on-cycle neighbors are always joined to each
    other, which pins the girth of the result at h-2.  Vertices keep their
    relative order when the two deleted labels are closed up.
    """
    h = girth(graph)
    if h == math.inf or h < 5:
        raise ValueError("excision needs girth at least 5")
    h = int(h)
    if cycle is None:
        cycle = next(cycles_of_length(graph, h))
    cycle = tuple(cycle)
    if len(cycle) != h:
        raise ValueError(f"cycle has {len(cycle)} vertices, girth is {h}")
    if len(set(cycle)) != h:
        raise ValueError("cycle vertices must be distinct")
    for i, v in enumerate(cycle):
        if not graph.has_edge(v, cycle[(i + 1) % h]):
            raise ValueError(f"{v} and {cycle[(i + 1) % h]} are not adjacent")
    if pair is None:
        pair = (cycle[0], cycle[1])
    u, v = pair
    if u not in cycle or v not in cycle or not graph.has_edge(u, v):
        raise ValueError("pair must be an edge of the cycle")
    au, bu = _cycle_neighbors(cycle, u)
    x1 = au if bu == v else bu
    av, bv = _cycle_neighbors(cycle, v)
    y1 = av if bv == u else bv
    if x1 == v or y1 == u:
        raise ValueError("pair must be an edge of the cycle")
    xs = sorted(set(graph.neighbors(u)) - {v, x1})
    ys = sorted(set(graph.neighbors(v)) - {u, y1})
    if len(xs) != len(ys):
        raise ValueError(f"endpoint degrees differ: {graph.degree(u)} vs {graph.degree(v)}")
    if pairing is None:
        pairing = range(len(ys))
    pairing = tuple(pairing)
    if sorted(pairing) != list(range(len(ys))):
        raise ValueError("pairing must be a permutation of the leftover neighbors")

    new_edges = [(x1, y1)] + [(xs[i], ys[pairing[i]]) for i in range(len(xs))]
    edges = [e for e in graph.edges() if u not in e and v not in e] + new_edges
    remap = {}
    nxt = 0
    for w in range(graph.order):
        if w != u and w != v:
            remap[w] = nxt
            nxt += 1
    return Graph(graph.order - 2, [(remap[a], remap[b]) for a, b in edges])


def iter_reductions(graph: Graph) -> Iterator[Graph]:
    """Every excision of the graph: all girth cycles, both orientations of
    each cycle edge, all matchings of the leftover neighbors."""
    h = girth(graph)
    if h == math.inf or h < 5:
        raise ValueError("excision needs girth at least 5")
    h = int(h)
    for cycle in cycles_of_length(graph, h):
        for i in range(h):
            e = (cycle[i], cycle[(i + 1) % h])
            for pair in (e, e[::-1]):
                spare = graph.degree(pair[1]) - 2
                for perm in permutations(range(spare)):
                    yield reduce_by_cycle(graph, cycle=cycle, pair=pair, pairing=perm)
