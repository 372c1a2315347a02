"""Voltage graphs, lifts, and the bipartite double cover.

A voltage assignment labels each dart (directed edge side) of a small base
multigraph with a group element, reversed darts getting inverse labels.  The
lift has a vertex per (base vertex, group element) and an edge per (base
edge, group element); cycles in the lift correspond to closed base walks
whose net voltage is the identity and whose prefix states are distinct, so
girth conditions can be tested without building the lift.

The bipartite double cover is the Z2 lift with voltage 1 on every edge; it
is used as an independent certificate that a graph has no (g+1)-cycle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from ._core import pure
from .graph import Graph, girth, is_regular
from .groups import Group


class DartGraph:
    """Base multigraph for voltage constructions; loops and parallel edges
    are allowed.  Edge e owns darts 2e (tail to head) and 2e+1 (reverse)."""

    __slots__ = ("num_vertices", "edges", "_at")

    def __init__(self, num_vertices: int, edges: Sequence[Tuple[int, int]]):
        if num_vertices < 1:
            raise ValueError("need at least one vertex")
        es = []
        at: List[List[int]] = [[] for _ in range(num_vertices)]
        for e, (u, v) in enumerate(edges):
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise ValueError(f"edge ({u},{v}) out of range")
            es.append((u, v))
            at[u].append(2 * e)
            at[v].append(2 * e + 1)
        self.num_vertices = num_vertices
        self.edges = tuple(es)
        self._at = tuple(tuple(ds) for ds in at)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_darts(self) -> int:
        return 2 * len(self.edges)

    def tail(self, d: int) -> int:
        u, v = self.edges[d >> 1]
        return u if d & 1 == 0 else v

    def head(self, d: int) -> int:
        u, v = self.edges[d >> 1]
        return v if d & 1 == 0 else u

    def reverse(self, d: int) -> int:
        return d ^ 1

    def edge_of(self, d: int) -> int:
        return d >> 1

    def darts_at(self, v: int) -> Tuple[int, ...]:
        """Darts whose tail is v; a loop at v contributes both of its darts."""
        return self._at[v]

    def degree(self, v: int) -> int:
        return len(self._at[v])


def dart_graph_from(graph: Graph) -> DartGraph:
    return DartGraph(graph.order, list(graph.edges()))


def K13Loop() -> DartGraph:
    """The claw with a loop at each leaf: the cubic base graph whose lifts
    cover all cubic graphs with a spanning star.  Edges 0..2 are the star,
    edge 3+i is the loop at leaf 1+i."""
    return DartGraph(4, [(0, 1), (0, 2), (0, 3), (1, 1), (2, 2), (3, 3)])


@dataclass(frozen=True)
class VoltageAssignment:
    """Group voltages on a dart graph, one per edge on its even dart."""

    base: DartGraph
    group: Group
    edge_voltages: Tuple[int, ...]

    def __post_init__(self):
        if len(self.edge_voltages) != self.base.num_edges:
            raise ValueError(
                f"got {len(self.edge_voltages)} voltages for {self.base.num_edges} edges"
            )
        for x in self.edge_voltages:
            if not (0 <= x < self.group.order):
                raise ValueError(f"{x} is not an element of {self.group.name}")

    def alpha(self, d: int) -> int:
        x = self.edge_voltages[d >> 1]
        return x if d & 1 == 0 else self.group.inverse(x)


def net_voltage(va: VoltageAssignment, darts: Sequence[int]) -> int:
    """Product of the voltages along a dart walk."""
    x = 0
    for d in darts:
        x = va.group.op(x, va.alpha(d))
    return x


def voltage_lift(va: VoltageAssignment) -> Graph:
    """The derived graph: vertex (v, x) is v*|G| + x, and edge e = uw with
    voltage a joins (u, x) to (w, x*a) for every x.

    The result is a simple graph: a loop whose voltage has order 2 yields one
    edge per fiber pair (its two darts give the same vertex pair), and any
    parallel lift edges collapse.  A loop with identity voltage would lift to
    actual loops and is rejected.
    """
    base, G = va.base, va.group
    m = G.order
    edges = []
    for e, (u, w) in enumerate(base.edges):
        a = va.edge_voltages[e]
        if u == w and a == 0:
            raise ValueError(f"loop at vertex {u} carries the identity voltage")
        for x in range(m):
            edges.append((u * m + x, w * m + G.op(x, a)))
    return Graph(base.num_vertices * m, edges)


def normalize_voltages(va: VoltageAssignment) -> VoltageAssignment:
    """Equivalent assignment with identity voltage on a BFS spanning forest.

    Gauge change by vertex potentials p: the new voltage of a dart from u to
    w is p(u) * alpha * p(w)^-1, which leaves the lift unchanged up to the
    relabelling (v, x) -> (v, x * p(v)^-1).
    """
    base, G = va.base, va.group
    p: List[Optional[int]] = [None] * base.num_vertices
    for root in range(base.num_vertices):
        if p[root] is not None:
            continue
        p[root] = 0
        queue = [root]
        while queue:
            u = queue.pop(0)
            for d in base.darts_at(u):
                w = base.head(d)
                if p[w] is None:
                    p[w] = G.op(p[u], va.alpha(d))
                    queue.append(w)
    volts = []
    for e, (u, w) in enumerate(base.edges):
        x = G.op(G.op(p[u], va.edge_voltages[e]), G.inverse(p[w]))
        volts.append(x)
    return VoltageAssignment(base, G, tuple(volts))


def lift_cycle_check(va: VoltageAssignment, length: int) -> bool:
    """Whether the lift contains a cycle of exactly `length` edges, decided
    on the base graph.

    Cycles of the lift project to closed base walks with identity net
    voltage whose prefix states (base vertex, partial voltage) are pairwise
    distinct; distinctness is exactly injectivity of the lifted walk, so
    this test is exact for length >= 3 (parallel lift edges that collapse in
    the simple lift only ever form closed walks of length 2).
    """
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    base, G = va.base, va.group

    for s in range(base.num_vertices):
        # each lift cycle translates into the identity fiber over the
        # smallest base vertex of its projection
        start = (s, 0)
        seen = {start}

        def dfs(v: int, x: int, left: int) -> bool:
            for d in base.darts_at(v):
                w = base.head(d)
                if w < s:
                    continue
                y = G.op(x, va.alpha(d))
                if left == 1:
                    if (w, y) == start:
                        return True
                    continue
                st = (w, y)
                if st in seen:
                    continue
                seen.add(st)
                hit = dfs(w, y, left - 1)
                seen.discard(st)
                if hit:
                    return True
            return False

        if dfs(s, 0, length):
            return True
    return False


def canonical_double_cover(graph: Graph) -> Graph:
    """Bipartite double cover: (v, s) is v + s*n, each edge uv lifting to
    (u,0)(v,1) and (u,1)(v,0).  Equals the Z2 lift with all voltages 1."""
    n = graph.order
    edges = []
    for u, v in graph.edges():
        edges.append((u, v + n))
        edges.append((v, u + n))
    return Graph(2 * n, edges)


def odd_girth_via_cover(graph: Graph) -> float:
    """Shortest odd cycle length, computed as the least distance between the
    two copies of a vertex in the double cover; inf when bipartite."""
    n = graph.order
    cdc = canonical_double_cover(graph)
    adj = list(cdc.adjacency_masks)
    best = math.inf
    for v in range(n):
        d = pure.bfs_dists(2 * n, adj, v)[v + n]
        if 0 <= d < best:
            best = d
    return best


def is_valid_target_by_cover(graph: Graph, k: int, g: int) -> bool:
    """Decide "k-regular, girth g, no (g+1)-cycle" through the double cover.

    For odd g the condition (given girth g) is that the cover has girth at
    least g+3; for even g, that the odd girth is at least g+3.  Independent
    of the backtracking cycle search, so the two can cross-check each other.
    """
    if not is_regular(graph, k) or girth(graph) != g:
        return False
    if g % 2:
        cdc = canonical_double_cover(graph)
        got = girth(cdc)
        return got == math.inf or got >= g + 3
    return odd_girth_via_cover(graph) >= g + 3


def k13loop_assignment(group: Group, loop_voltages: Sequence[int]) -> VoltageAssignment:
    """Assignment on the claw-with-loops base: identity on the star edges,
    the given voltages on the loops at leaves 1, 2, 3."""
    v1, v2, v3 = loop_voltages
    return VoltageAssignment(K13Loop(), group, (0, 0, 0, v1, v2, v3))


def k13loop_triples(group: Group, g: int, limit: Optional[int] = None) -> List[Tuple[int, int, int]]:
    """All loop-voltage triples whose claw-with-loops lift is a cubic graph
    of girth exactly g with no (g+1)-cycle.

    Spanning-tree normalization puts the identity on the star edges, leaf
    permutations sort the triple, and reversing a loop inverts its voltage,
    so candidates are sorted triples of inverse-minimal non-identity
    elements.  Elements of order <= 2 cannot give a cubic lift (the loop
    fiber collapses) and are skipped.  Partial triples are cut as soon as
    the partial lift already holds a cycle of forbidden length; every
    surviving triple is confirmed on the explicitly built lift.
    """
    if g < 3:
        raise ValueError("girth must be at least 3")
    from .generator import is_valid_target

    cands = sorted(
        {min(v, group.inverse(v)) for v in group.elements() if group.element_order(v) > 2}
    )
    forbidden = list(range(3, g)) + [g + 1]

    def clean(va: VoltageAssignment) -> bool:
        return not any(lift_cycle_check(va, L) for L in forbidden)

    base1 = DartGraph(4, [(0, 1), (0, 2), (0, 3), (1, 1)])
    base2 = DartGraph(4, [(0, 1), (0, 2), (0, 3), (1, 1), (2, 2)])
    hits: List[Tuple[int, int, int]] = []
    for i, v1 in enumerate(cands):
        if not clean(VoltageAssignment(base1, group, (0, 0, 0, v1))):
            continue
        for j in range(i, len(cands)):
            v2 = cands[j]
            if not clean(VoltageAssignment(base2, group, (0, 0, 0, v1, v2))):
                continue
            for t in range(j, len(cands)):
                v3 = cands[t]
                va = k13loop_assignment(group, (v1, v2, v3))
                if not clean(va):
                    continue
                if not lift_cycle_check(va, g):
                    continue
                lift = voltage_lift(va)
                if is_valid_target(lift, 3, g):
                    hits.append((v1, v2, v3))
                    if limit is not None and len(hits) >= limit:
                        return hits
    return hits


def search_k13loop_lifts(
    g: int,
    groups: Iterable[Group],
    cap: Optional[int] = None,
) -> Optional[Tuple[int, List[Tuple[Group, List[Tuple[int, int, int]]]]]]:
    """Scan voltage groups for the smallest claw-with-loops lift that is a
    cubic graph of girth g with no (g+1)-cycle.

    ``groups`` must be supplied in nondecreasing order of group order; the
    lift on a group of order m has 4m vertices.  Returns ``(4m, witnesses)``
    where witnesses pairs each successful group of the minimal order m with
    its voltage triples, or None when the source is exhausted (or every
    remaining lift would exceed ``cap`` vertices).
    """
    best: Optional[int] = None
    witnesses: List[Tuple[Group, List[Tuple[int, int, int]]]] = []
    last = 0
    for group in groups:
        m = group.order
        if m < last:
            raise ValueError("groups must be supplied in nondecreasing order")
        last = m
        if best is not None and 4 * m > best:
            break
        if cap is not None and 4 * m > cap:
            break
        triples = k13loop_triples(group, g)
        if triples:
            best = 4 * m
            witnesses.append((group, triples))
    if best is None:
        return None
    return best, witnesses
