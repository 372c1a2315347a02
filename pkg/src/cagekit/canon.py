"""Canonical forms, isomorphism tests, orbits, and the dedup store.

The canonical form of a graph is the graph6 encoding (header plus adjacency
bytes) of a canonically relabeled copy, so two graphs are isomorphic exactly
when their forms are equal as byte strings.  Isolated vertices are stripped
before canonization and appended at the end of the ordering, which keeps the
search cheap on the sparse early states of the generator.
"""

from __future__ import annotations

import os
import threading
from typing import Dict, List, Optional

from . import _core
from ._core import DedupCapacityError, pure
from .graph import Graph
from . import graph6

DEFAULT_DEDUP_CAP = 1 << 26


def canonical_form(g: Graph) -> bytes:
    """Bytes equal across isomorphic graphs and distinct otherwise."""
    return _core.backend_for(g.order).canonical_form(g.order, list(g.adjacency_masks))


def canonical_graph(g: Graph) -> Graph:
    """A canonically relabeled copy; same form for all graphs isomorphic to g."""
    return graph6.decode(canonical_form(g))


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.order != b.order or a.num_edges != b.num_edges:
        return False
    return canonical_form(a) == canonical_form(b)


def _form_with_root(g: Graph, v: int) -> bytes:
    """Canonical form with vertex v forced into its own initial cell."""
    n = g.order
    rest = [u for u in range(n) if u != v]
    cells = [[v], rest] if rest else [[v]]
    return pure.canonical_form(n, list(g.adjacency_masks), cells)


def vertex_orbits(g: Graph) -> List[List[int]]:
    """Orbits of the automorphism group acting on vertices.

    Two vertices lie in the same orbit iff the canonical forms obtained by
    distinguishing each of them agree.
    """
    n = g.order
    by_form: Dict[bytes, List[int]] = {}
    for v in range(n):
        by_form.setdefault(_form_with_root(g, v), []).append(v)
    orbits = sorted(by_form.values(), key=lambda o: o[0])
    return orbits


def _orbit_of(n: int, adj, fixed: List[int], v: int) -> List[int]:
    """Orbit of v under the stabilizer of the vertices in `fixed` (pointwise)."""
    singles = [[x] for x in fixed]
    rest = [u for u in range(n) if u not in fixed]
    by_form: Dict[bytes, List[int]] = {}
    for u in rest:
        others = [w for w in rest if w != u]
        cells = singles + [[u]] + ([others] if others else [])
        by_form.setdefault(pure.canonical_form(n, adj, cells), []).append(u)
    for orb in by_form.values():
        if v in orb:
            return orb
    raise AssertionError("vertex missing from its own orbit partition")


def automorphism_group_order(g: Graph) -> int:
    """|Aut(g)| via the orbit-stabilizer chain.

    Fix vertices one at a time; the group order is the product of the orbit
    sizes of each newly fixed vertex under the stabilizer of the previous
    ones.  Fine for the orders this library works at; not a general-purpose
    group engine.
    """
    n = g.order
    adj = list(g.adjacency_masks)
    fixed: List[int] = []
    order = 1
    for v in range(n):
        if v in fixed:
            continue
        orb = _orbit_of(n, adj, fixed, v)
        order *= len(orb)
        fixed.append(v)
        if len(fixed) == n - 1:
            break
    return order


class DedupStore:
    """Thread-safe set of canonical forms with a hard capacity.

    The generator inserts the form of every add-branch child; a hit means the
    subtree was already explored from an isomorphic state.  On overflow an
    insert raises DedupCapacityError so the caller can drop dedup and keep
    searching (correctness does not depend on the store, only speed).
    """

    def __init__(self, cap: Optional[int] = None):
        if cap is None:
            cap = int(os.environ.get("CAGEKIT_DEDUP_CAP", DEFAULT_DEDUP_CAP))
        self.cap = cap
        self._seen: set = set()
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._seen)

    def insert_if_new(self, form: bytes) -> bool:
        """Insert; True if the form was new."""
        with self._lock:
            if form in self._seen:
                return False
            if len(self._seen) >= self.cap:
                raise DedupCapacityError(
                    f"dedup store reached its cap of {self.cap} forms"
                )
            self._seen.add(form)
            return True
