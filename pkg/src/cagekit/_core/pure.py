"""Pure-Python kernels.

Graphs are handled as (n, adj) where adj is a list of int bitmasks, bit w of
adj[v] set iff vw is an edge.  These functions are the reference
implementations; cagekit._core._fast mirrors them in Cython for n <= 64.
Both must produce byte-identical canonical forms and identical search output.
"""

from __future__ import annotations

from typing import Callable, Optional

BIG = 1 << 20


class DedupCapacityError(RuntimeError):
    """Raised by a dedup store whose configured capacity is exhausted."""


# ---------------------------------------------------------------------------
# graph6 low-level encoding (shared with the codec so canonical forms are
# literally graph6 lines of the canonically relabelled graph)

def g6_header(n: int) -> bytes:
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise ValueError("order too large for this graph6 encoder")


def encode_body(n: int, adj: list) -> bytes:
    """Pack the upper triangle, column by column, into 6-bit groups."""
    out = bytearray()
    acc = 0
    nb = 0
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nb += 1
            if nb == 6:
                out.append(acc + 63)
                acc = 0
                nb = 0
    if nb:
        out.append((acc << (6 - nb)) + 63)
    return bytes(out)


# ---------------------------------------------------------------------------
# traversal primitives

def bfs_dists(n: int, adj: list, src: int, allowed: Optional[int] = None) -> list:
    """Distances from src (-1 where unreachable), optionally restricted to an
    allowed vertex mask (src must be allowed)."""
    dist = [-1] * n
    dist[src] = 0
    seen = 1 << src
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            nxt |= adj[b.bit_length() - 1]
        if allowed is not None:
            nxt &= allowed
        nxt &= ~seen
        seen |= nxt
        m = nxt
        while m:
            b = m & -m
            m ^= b
            dist[b.bit_length() - 1] = d
        frontier = nxt
    return dist


def girth_of(n: int, adj: list) -> int:
    """Length of a shortest cycle, 0 if the graph is acyclic."""
    best = 0
    for s in range(n):
        dist = [-1] * n
        par = [-1] * n
        dist[s] = 0
        queue = [s]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            dx = dist[x]
            if best and 2 * dx >= best:
                break
            m = adj[x]
            while m:
                b = m & -m
                m ^= b
                y = b.bit_length() - 1
                if dist[y] < 0:
                    dist[y] = dx + 1
                    par[y] = x
                    queue.append(y)
                elif par[x] != y and par[y] != x:
                    cand = dx + dist[y] + 1
                    if best == 0 or cand < best:
                        best = cand
    return best


def _dfs_cycle(adj: list, s: int, x: int, left: int, visited: int, dist: list) -> bool:
    if left == 1:
        return (adj[x] >> s) & 1 == 1
    m = adj[x] & ~visited
    while m:
        b = m & -m
        m ^= b
        y = b.bit_length() - 1
        dy = dist[y]
        if 0 <= dy < left:
            if _dfs_cycle(adj, s, y, left - 1, visited | b, dist):
                return True
    return False


def has_cycle_len(n: int, adj: list, length: int) -> bool:
    """Whether some cycle of exactly `length` edges exists (length >= 3)."""
    if length < 3 or length > n:
        return False
    full = (1 << n) - 1
    for s in range(n):
        # cycles whose minimum vertex is s
        hi = full ^ ((1 << s) - 1)
        if (adj[s] & hi).bit_count() < 2:
            continue
        sub = [adj[v] & hi for v in range(n)]
        dist = bfs_dists(n, sub, s, allowed=hi)
        if _dfs_cycle(sub, s, s, length, 1 << s, dist):
            return True
    return False


def _dfs_path(adj: list, dst: int, x: int, left: int, visited: int, dist: list) -> bool:
    if left == 1:
        return (adj[x] >> dst) & 1 == 1
    m = adj[x] & ~visited & ~(1 << dst)
    while m:
        b = m & -m
        m ^= b
        y = b.bit_length() - 1
        dy = dist[y]
        if 0 <= dy < left:
            if _dfs_path(adj, dst, y, left - 1, visited | b, dist):
                return True
    return False


def exists_path_exact(n: int, adj: list, src: int, dst: int, length: int, dist_from_dst: list) -> bool:
    """Whether a simple path of exactly `length` edges joins src and dst.

    dist_from_dst must be a BFS distance array rooted at dst.
    """
    if src == dst or length <= 0:
        return False
    d = dist_from_dst[src]
    if d < 0 or d > length:
        return False
    return _dfs_path(adj, dst, src, length, 1 << src, dist_from_dst)


# ---------------------------------------------------------------------------
# canonical form: iterated equitable refinement + individualization,
# lexicographically least adjacency encoding over discrete leaves, with
# sound automorphism-orbit pruning.

def _refine(n: int, adj: list, cells: list) -> list:
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sigs = {}
            for v in cell:
                av = adj[v]
                sig = tuple((av & m).bit_count() for m in masks)
                sigs.setdefault(sig, []).append(v)
            if len(sigs) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for sig in sorted(sigs):
                    new_cells.append(sigs[sig])
        cells = new_cells
        if not changed:
            return cells


def _relabel(n: int, adj: list, perm: list) -> list:
    radj = [0] * n
    for v in range(n):
        m = adj[v]
        rm = 0
        while m:
            b = m & -m
            m ^= b
            rm |= 1 << perm[b.bit_length() - 1]
        radj[perm[v]] = rm
    return radj


def _orbit_equiv(n: int, auts: list, base: list, v: int, explored: list) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    used = False
    for sigma in auts:
        ok = True
        for b in base:
            if sigma[b] != b:
                ok = False
                break
        if not ok:
            continue
        used = True
        for u in range(n):
            ru, rs = find(u), find(sigma[u])
            if ru != rs:
                parent[ru] = rs
    if not used:
        return False
    rv = find(v)
    for w in explored:
        if find(w) == rv:
            return True
    return False


def _canon_search(n: int, adj: list, cells0: list) -> list:
    best_body = None
    best_perm = None
    auts: list = []
    base: list = []
    ident = tuple(range(n))

    def leaf(cells):
        nonlocal best_body, best_perm
        perm = [0] * n
        for pos, cell in enumerate(cells):
            perm[cell[0]] = pos
        body = encode_body(n, _relabel(n, adj, perm))
        if best_body is None or body < best_body:
            best_body = body
            best_perm = perm
        elif body == best_body:
            inv = [0] * n
            for v in range(n):
                inv[best_perm[v]] = v
            sigma = tuple(inv[perm[v]] for v in range(n))
            if sigma != ident:
                auts.append(sigma)

    def rec(cells):
        ns = -1
        for i, c in enumerate(cells):
            if len(c) > 1:
                ns = i
                break
        if ns < 0:
            leaf(cells)
            return
        cell = cells[ns]
        explored = []
        for v in cell:
            if explored and _orbit_equiv(n, auts, base, v, explored):
                continue
            explored.append(v)
            base.append(v)
            child = cells[:ns] + [[v], [w for w in cell if w != v]] + cells[ns + 1:]
            rec(_refine(n, adj, child))
            base.pop()

    rec(_refine(n, adj, cells0))
    return best_perm


def canonical_form(n: int, adj: list, cells: Optional[list] = None) -> bytes:
    """graph6 line (no newline) of a canonical relabelling of the graph.

    Equal bytes iff isomorphic (respecting the initial partition when given).
    With no initial partition, degree-0 vertices are placed last; the core is
    canonized on its own, which keeps partial search states cheap.
    """
    if n == 0:
        return g6_header(0)
    if cells is None:
        core = [v for v in range(n) if adj[v] != 0]
        m = len(core)
        if m < n:
            if m == 0:
                return g6_header(n) + encode_body(n, [0] * n)
            remap = {}
            for i, v in enumerate(core):
                remap[v] = i
            cadj = [0] * m
            for i, v in enumerate(core):
                mm = adj[v]
                rm = 0
                while mm:
                    b = mm & -mm
                    mm ^= b
                    rm |= 1 << remap[b.bit_length() - 1]
                cadj[i] = rm
            perm = _canon_search(m, cadj, [list(range(m))])
            radj = _relabel(m, cadj, perm) + [0] * (n - m)
            return g6_header(n) + encode_body(n, radj)
        perm = _canon_search(n, adj, [list(range(n))])
    else:
        perm = _canon_search(n, adj, [sorted(c) for c in cells])
    return g6_header(n) + encode_body(n, _relabel(n, adj, perm))


# ---------------------------------------------------------------------------
# eligibility for the exhaustive generator

def compute_eligible_raw(n: int, k: int, g: int, adj: list) -> list:
    """Per-vertex masks of partners w such that the edge vw can be added
    without creating a cycle shorter than g or of length exactly g+1."""
    deg = [adj[v].bit_count() for v in range(n)]
    elig = [0] * n
    for u in range(n):
        if deg[u] >= k:
            continue
        dist_u = bfs_dists(n, adj, u)
        for w in range(u + 1, n):
            if deg[w] >= k or (adj[u] >> w) & 1:
                continue
            dw = dist_u[w]
            if 0 <= dw < g - 1:
                continue
            if exists_path_exact(n, adj, w, u, g, dist_u):
                continue
            elig[u] |= 1 << w
            elig[w] |= 1 << u
    return elig


def update_eligible(n: int, k: int, g: int, adj: list, deg: list, elig_old: list, a: int, b: int) -> list:
    """Filter eligibility after edge ab was added (adj/deg are post-add).

    Eligibility only shrinks when edges are added, so pairs are re-tested,
    never added.  Only pairs whose endpoints can reach a shorter connection
    through the new edge need a re-test.
    """
    elig = elig_old[:]
    elig[a] &= ~(1 << b)
    elig[b] &= ~(1 << a)
    for x in (a, b):
        if deg[x] >= k and elig[x]:
            mx = elig[x]
            elig[x] = 0
            while mx:
                bb = mx & -mx
                mx ^= bb
                elig[bb.bit_length() - 1] &= ~(1 << x)
    da = bfs_dists(n, adj, a)
    db = bfs_dists(n, adj, b)
    for v in range(n):
        wm = (elig[v] >> (v + 1)) << (v + 1)
        if not wm:
            continue
        dva = da[v] if da[v] >= 0 else BIG
        dvb = db[v] if db[v] >= 0 else BIG
        dist_v = None
        while wm:
            bb = wm & -wm
            wm ^= bb
            w = bb.bit_length() - 1
            dwa = da[w] if da[w] >= 0 else BIG
            dwb = db[w] if db[w] >= 0 else BIG
            if min(dva + dwb, dvb + dwa) + 1 > g:
                continue
            if dist_v is None:
                dist_v = bfs_dists(n, adj, v)
            dw = dist_v[w]
            if (0 <= dw < g - 1) or exists_path_exact(n, adj, w, v, g, dist_v):
                elig[v] &= ~(1 << w)
                elig[w] &= ~(1 << v)
    return elig


# ---------------------------------------------------------------------------
# exhaustive generation core (branch and prune)

def generate_core(
    n: int,
    k: int,
    g: int,
    adj0: list,
    elig0: list,
    m0: int,
    store,
    collect: Callable[[bytes], None],
    frontier_depth: Optional[int] = None,
    warn: Optional[Callable[[str], None]] = None,
):
    """Recursive branch-and-prune search.

    adj0/elig0/m0 describe the starting state (seed graph, raw eligibility,
    edge count).  Emits canonical forms of every completed valid graph via
    collect (duplicates possible; the caller dedups and sorts).  When
    frontier_depth is given, recursion stops at that decision depth and the
    pending states are returned instead of being explored.
    """
    target = n * k // 2
    full = (1 << n) - 1
    dedup_on = store is not None
    frontier: Optional[list] = [] if frontier_depth is not None else None
    stats = {"nodes": 0}

    deg0 = [adj0[v].bit_count() for v in range(n)]

    def rec(adj, deg, elig, m, depth, check_dedup):
        nonlocal dedup_on
        stats["nodes"] += 1
        for v in range(n):
            dv = deg[v]
            if dv < k and dv + elig[v].bit_count() < k:
                return
        if check_dedup and dedup_on:
            form = canonical_form(n, adj)
            try:
                if not store.insert_if_new(form):
                    return
            except DedupCapacityError:
                dedup_on = False
                if warn is not None:
                    warn("dedup store is full; continuing without isomorphism pruning")
        if m == target:
            if girth_of(n, adj) == g and not has_cycle_len(n, adj, g + 1):
                collect(canonical_form(n, adj))
            return
        if frontier is not None and depth >= frontier_depth:
            frontier.append((adj[:], elig[:], m))
            return
        iso = 0
        for v in range(n):
            if deg[v] == 0:
                iso |= 1 << v
        if iso:
            m1b = iso & -iso
            rest = iso ^ m1b
            m2b = rest & -rest
            noniso = full ^ iso
        best_v = -1
        best_c = BIG
        best_cand = 0
        for v in range(n):
            if deg[v] >= k:
                continue
            ev = elig[v]
            if not ev:
                continue
            if iso:
                vb = 1 << v
                if not (vb & iso):
                    cand = ev & (noniso | m1b)
                elif vb == m1b:
                    cand = ev & (noniso | m2b)
                elif vb == m2b:
                    cand = ev & m1b
                else:
                    cand = 0
            else:
                cand = ev
            if cand:
                c = cand.bit_count()
                if c < best_c:
                    best_c = c
                    best_v = v
                    best_cand = cand
        if best_v < 0:
            return
        u = best_v
        w = (best_cand & -best_cand).bit_length() - 1
        a, b = (u, w) if u < w else (w, u)
        was_iso = deg[u] == 0 or deg[w] == 0
        adj2 = adj[:]
        adj2[a] |= 1 << b
        adj2[b] |= 1 << a
        deg2 = deg[:]
        deg2[a] += 1
        deg2[b] += 1
        elig2 = update_eligible(n, k, g, adj2, deg2, elig, a, b)
        rec(adj2, deg2, elig2, m + 1, depth + 1, not was_iso)
        elig3 = elig[:]
        elig3[a] &= ~(1 << b)
        elig3[b] &= ~(1 << a)
        rec(adj, deg, elig3, m, depth + 1, False)

    rec(adj0[:], deg0, elig0[:], m0, 0, False)
    return frontier, stats


# ---------------------------------------------------------------------------
# dumb exhaustive enumeration of k-regular graphs (test oracle)

def all_regular_core(
    n: int,
    k: int,
    collect: Callable[[list], None],
    girth_floor: Optional[int] = None,
    require_girth: Optional[int] = None,
    forbid_cycle_len: Optional[int] = None,
):
    """Enumerate every labelled graph with all degrees exactly k, pruning only
    on degrees (and, when girth_floor is given, on cycles shorter than it).
    collect receives the adjacency mask list of each terminal graph; when
    require_girth / forbid_cycle_len are set, terminals failing those checks
    are counted but not passed to collect (keeps the callback volume down on
    big runs).  Returns the number of terminals reached."""
    pairs = []
    for u in range(n):
        for v in range(u + 1, n):
            pairs.append((u, v))
    np_ = len(pairs)
    target = n * k // 2
    # rem[idx][v]: how many pairs from idx onwards touch v
    rem = [[0] * n for _ in range(np_ + 1)]
    for idx in range(np_ - 1, -1, -1):
        row = rem[idx + 1][:]
        u, v = pairs[idx]
        row[u] += 1
        row[v] += 1
        rem[idx] = row

    adj = [0] * n
    deg = [0] * n
    terminals = 0

    def rec(idx, m):
        nonlocal terminals
        if m == target:
            terminals += 1
            if require_girth is not None and girth_of(n, adj) != require_girth:
                return
            if forbid_cycle_len is not None and has_cycle_len(n, adj, forbid_cycle_len):
                return
            collect(adj[:])
            return
        if idx == np_ or np_ - idx < target - m:
            return
        ri = rem[idx]
        for v in range(n):
            if deg[v] + ri[v] < k:
                return
        u, v = pairs[idx]
        if deg[u] < k and deg[v] < k:
            ok = True
            if girth_floor is not None and girth_floor > 3:
                d = bfs_dists(n, adj, u)[v]
                if 0 <= d < girth_floor - 1:
                    ok = False
            if ok:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                deg[u] += 1
                deg[v] += 1
                rec(idx + 1, m + 1)
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
                deg[u] -= 1
                deg[v] -= 1
        rec(idx + 1, m)

    rec(0, 0)
    return terminals
