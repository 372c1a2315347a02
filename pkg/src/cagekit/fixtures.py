"""Named graphs used by the tests, the docs, and the CLI examples.

Everything here is constructed from an explicit edge description and then
property-checked in the test suite; nothing is trusted by fiat.  The .g6
files under cagekit/data are snapshots of a few of these (plus the two large
lift-built graphs) for exercising file input paths.
"""

from __future__ import annotations

from importlib import resources
from typing import List

from . import graph6
from .graph import Graph


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def lcf_graph(n: int, pattern: List[int]) -> Graph:
    """Hamiltonian cubic graph from LCF notation: an n-cycle plus the chord
    i -> i + pattern[i mod len(pattern)] for every i."""
    edges = [(i, (i + 1) % n) for i in range(n)]
    for i in range(n):
        edges.append((i, (i + pattern[i % len(pattern)]) % n))
    return Graph(n, edges)


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def heawood() -> Graph:
    """The 14-vertex bipartite cubic graph of girth 6 (LCF [5,-5]^7)."""
    return lcf_graph(14, [5, -5])


def generalized_petersen(n: int, j: int) -> Graph:
    """Outer n-ring 0..n-1, inner star polygon n..2n-1 with step j, spokes."""
    if n < 3 or not (1 <= j < n):
        raise ValueError("need n >= 3 and 1 <= j < n")
    if 2 * j % n == 0:
        raise ValueError("inner step n/2 collapses the star polygon to doubled edges")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + j) % n))
    return Graph(2 * n, edges)


def tricorn() -> Graph:
    """Cubic, 10 vertices, girth 3, no 4-cycles: three triangles hung on a
    hub by their apexes, tied together by an outer 6-ring."""
    edges = [(0, 1), (0, 2), (0, 3)]
    edges += [(1, 4), (1, 9), (2, 5), (2, 6), (3, 7), (3, 8)]
    edges += [(4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 4)]
    return Graph(10, edges)


def tricorn_mate() -> Graph:
    """The other cubic 10-vertex girth-3 graph with no 4-cycles: a hub over
    two disjoint triangles joined by a perfect matching."""
    edges = [(0, 1), (0, 2), (0, 3)]
    edges += [(4, 6), (6, 8), (8, 4), (5, 7), (7, 9), (9, 5)]
    edges += [(1, 6), (1, 7), (2, 8), (2, 9), (3, 4), (3, 5)]
    return Graph(10, edges)


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of g in lexicographic order; adjacency is
    sharing an endpoint."""
    es = list(g.edges())
    out = []
    for i in range(len(es)):
        a, b = es[i]
        for j in range(i + 1, len(es)):
            c, d = es[j]
            if a == c or a == d or b == c or b == d:
                out.append((i, j))
    return Graph(len(es), out)


def quartic_15() -> Graph:
    """4-regular, 15 vertices, girth 3, no 4-cycles; not vertex-transitive
    (unlike the Petersen line graph, the other graph with these parameters)."""
    edges = [(i, (i + 1) % 6) for i in range(6)]          # outer ring
    edges += [(i, 6 + i) for i in range(6)]               # spokes
    edges += [(6, 8), (6, 10), (8, 10), (7, 9), (7, 11), (9, 11)]
    edges += [(12, 11), (12, 5), (12, 8), (12, 2)]
    edges += [(13, 6), (13, 0), (13, 9), (13, 3)]
    edges += [(14, 7), (14, 1), (14, 10), (14, 4)]
    return Graph(15, edges)


def campbell() -> Graph:
    """Cubic, 28 vertices, girth 6, no 7-cycle, odd girth 11.

    Two mirrored halves, each an 8-ring with four inner vertices, joined
    through four middle vertices.
    """

    def half(base: int) -> List:
        r = list(range(base, base + 8))            # ring R1..R8
        p, q, s, t = base + 8, base + 9, base + 10, base + 11
        edges = [(r[i], r[(i + 1) % 8]) for i in range(8)]
        edges += [(s, r[1]), (s, r[5]), (t, r[0]), (t, r[4])]
        edges += [(p, q), (p, s), (q, t)]
        return edges

    edges = half(0) + half(12)
    m1, m2, m3, m4 = 24, 25, 26, 27
    # half A to middles
    edges += [(8, m2), (9, m1), (7, m3), (2, m4), (3, m3), (6, m4)]
    # half B to middles
    edges += [(20, m3), (21, m4), (19, m1), (14, m2), (15, m1), (18, m2)]
    return Graph(28, edges)


def data_path(name: str):
    """Path-like handle to a packaged data file."""
    return resources.files("cagekit").joinpath("data").joinpath(name)


def load_shipped(name: str) -> Graph:
    """Decode one packaged .g6 snapshot (first line of the file)."""
    text = data_path(name).read_text()
    line = text.splitlines()[0]
    return graph6.decode(line)


def cubic_cage_g7() -> Graph:
    """The 36-vertex cubic graph of girth 7 with no 8-cycles (lift-built)."""
    return load_shipped("cubic_g7_36.g6")


def cubic_record_g9() -> Graph:
    """The 76-vertex cubic graph of girth 9 with no 10-cycles (lift-built)."""
    return load_shipped("cubic_g9_76.g6")
