"""Simple undirected graphs with bitset adjacency, plus cycle queries.

Graph values are immutable; edits return new graphs.  Query functions return
math.inf where no cycle (or no path) exists so results compare cleanly
against integer thresholds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Tuple

from . import _core
from ._core import pure

MAX_VERTICES = 8192

INF = math.inf


class Graph:
    __slots__ = ("_n", "_adj", "_m")

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]] = ()):
        if n < 0 or n > MAX_VERTICES:
            raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}")
        adj = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if not (adj[u] >> v) & 1:
                m += 1
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._adj = tuple(adj)
        self._m = m

    @classmethod
    def _from_masks(cls, n: int, masks) -> "Graph":
        g = object.__new__(cls)
        g._n = n
        g._adj = tuple(masks)
        g._m = sum(m.bit_count() for m in masks) // 2
        return g

    @property
    def order(self) -> int:
        return self._n

    @property
    def num_edges(self) -> int:
        return self._m

    @property
    def adjacency_masks(self) -> Tuple[int, ...]:
        return self._adj

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self):
        return [m.bit_count() for m in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return (self._adj[u] >> v) & 1 == 1

    def neighbors(self, v: int) -> Tuple[int, ...]:
        out = []
        m = self._adj[v]
        while m:
            b = m & -m
            m ^= b
            out.append(b.bit_length() - 1)
        return tuple(out)

    def edges(self) -> Iterator[Tuple[int, int]]:
        for u in range(self._n):
            m = (self._adj[u] >> (u + 1)) << (u + 1)
            while m:
                b = m & -m
                m ^= b
                yield (u, b.bit_length() - 1)

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("loop edges not allowed")
        adj = list(self._adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._from_masks(self._n, adj)

    def without_vertices(self, drop: Iterable[int]) -> "Graph":
        """Delete vertices and relabel the survivors, preserving order."""
        dropset = set(drop)
        keep = [v for v in range(self._n) if v not in dropset]
        remap = {v: i for i, v in enumerate(keep)}
        edges = []
        for u, v in self.edges():
            if u in dropset or v in dropset:
                continue
            edges.append((remap[u], remap[v]))
        return Graph(len(keep), edges)

    def relabel(self, perm) -> "Graph":
        """Apply a permutation given as perm[old] = new."""
        return Graph(self._n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


@dataclass(frozen=True)
class CycleQueryResult:
    """Outcome of a shortest-cycle query: length plus one witness cycle."""

    length: float
    witness: Optional[Tuple[int, ...]] = None


def _kernel(g: Graph):
    return _core.backend_for(g.order)


def girth(g: Graph) -> float:
    """Length of a shortest cycle, inf for forests."""
    got = _kernel(g).girth_of(g.order, list(g.adjacency_masks))
    return got if got else INF


def distance(g: Graph, u: int, v: int) -> float:
    d = pure.bfs_dists(g.order, list(g.adjacency_masks), u)[v]
    return d if d >= 0 else INF


def has_cycle_of_length(g: Graph, length: int) -> bool:
    """Whether the graph contains a cycle of exactly `length` edges.

    Backtracking over anchored simple paths with BFS distance pruning.
    """
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    return _kernel(g).has_cycle_len(g.order, list(g.adjacency_masks), length)


def is_bipartite(g: Graph) -> bool:
    n = g.order
    adj = g.adjacency_masks
    color = [-1] * n
    for s in range(n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            x = queue.pop()
            cx = color[x]
            m = adj[x]
            while m:
                b = m & -m
                m ^= b
                y = b.bit_length() - 1
                if color[y] < 0:
                    color[y] = 1 - cx
                    queue.append(y)
                elif color[y] == cx:
                    return False
    return True


def odd_girth(g: Graph) -> float:
    """Length of a shortest odd cycle, inf for bipartite graphs."""
    if is_bipartite(g):
        return INF
    for length in range(3, g.order + 1, 2):
        if has_cycle_of_length(g, length):
            return length
    return INF  # unreachable for non-bipartite input


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return True
    return pure.bfs_dists(g.order, list(g.adjacency_masks), 0).count(-1) == 0


def connected_components(g: Graph):
    n = g.order
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        dist = pure.bfs_dists(n, list(g.adjacency_masks), s)
        comp = [v for v in range(n) if dist[v] >= 0 and not seen[v]]
        for v in comp:
            seen[v] = True
        comps.append(comp)
    return comps


def is_regular(g: Graph, k: int) -> bool:
    return all(m.bit_count() == k for m in g.adjacency_masks)


def shortest_cycle(g: Graph) -> CycleQueryResult:
    """Shortest cycle with a witness vertex sequence."""
    n = g.order
    adj = list(g.adjacency_masks)
    best = pure.girth_of(n, adj)
    if not best:
        return CycleQueryResult(INF, None)
    wit = next(cycles_of_length(g, best), None)
    return CycleQueryResult(best, wit)


def cycles_of_length(g: Graph, length: int) -> Iterator[Tuple[int, ...]]:
    """All cycles of exactly `length` edges, each exactly once.

    Cycles are emitted as vertex tuples normalized to start at their minimum
    vertex with the smaller second endpoint, in lexicographic order.
    """
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    n = g.order
    adj = list(g.adjacency_masks)
    full = (1 << n) - 1
    for s in range(n):
        hi = full ^ ((1 << s) - 1)
        sub = [adj[v] & hi for v in range(n)]
        dist = pure.bfs_dists(n, sub, s, allowed=hi)
        path = [s]

        def walk(x, left, visited):
            if left == 1:
                if (sub[x] >> s) & 1 and path[1] < path[-1]:
                    yield tuple(path)
                return
            m = sub[x] & ~visited
            while m:
                b = m & -m
                m ^= b
                y = b.bit_length() - 1
                dy = dist[y]
                if 0 <= dy < left:
                    path.append(y)
                    yield from walk(y, left - 1, visited | b)
                    path.pop()

        yield from walk(s, length, 1 << s)
